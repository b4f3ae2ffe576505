#include "polyred/poset.hpp"

#include <algorithm>
#include <sstream>

#include "polyred/encoding.hpp"
#include "polyred/exceptional.hpp"

namespace polyred {

PosetReport build_poset(std::vector<std::pair<std::string, FiniteSubset>> sets)
{
    if (sets.empty())
        throw PreconditionError("poset needs at least one set");
    std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    PosetReport rep;
    for (auto& [label, set] : sets) {
        ClassInvariant inv = canonical_invariant(set);
        auto same = std::find_if(rep.nodes.begin(), rep.nodes.end(), [&](const PosetNode& n) {
            return n.invariant == inv && equivalent(n.set, set);
        });
        if (same != rep.nodes.end()) {
            same->members.push_back(label);
            continue;
        }
        PosetNode node{label, {label}, set, std::move(inv), std::nullopt, false};
        if (set.size() >= 3) {
            node.chi = chi(set);
            node.exceptional = is_exceptional(set);
        }
        rep.nodes.push_back(std::move(node));
    }

    const std::size_t k = rep.nodes.size();
    rep.relation.assign(k, std::vector<bool>(k, false));
    std::vector<std::vector<std::optional<Reduction>>> witness(k);
    for (std::size_t i = 0; i < k; ++i) {
        witness[i].resize(k);
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) {
                witness[i][j] = reduction_witness(rep.nodes[i].set, rep.nodes[j].set);
                rep.relation[i][j] = witness[i][j].has_value();
            }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!rep.relation[i][j])
                continue;
            bool implied = false;
            for (std::size_t m = 0; m < k && !implied; ++m)
                implied = m != i && m != j && rep.relation[i][m] && rep.relation[m][j];
            if (!implied)
                rep.edges.push_back(PosetEdge{i, j, std::move(*witness[i][j])});
        }
    return rep;
}

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string poset_to_dot(const PosetReport& report)
{
    std::ostringstream os;
    os << "digraph poset {\n";
    for (const auto& n : report.nodes) {
        const std::string chi = n.chi ? std::to_string(*n.chi) : "-";
        os << "  " << quoted(n.label) << " [label="
           << quoted(n.label + " (n=" + std::to_string(n.set.size()) + ", \xCF\x87=" + chi + ")") << "];\n";
    }
    for (const auto& e : report.edges)
        os << "  " << quoted(report.nodes[e.source].label) << " -> " << quoted(report.nodes[e.target].label)
           << " [label=" << quoted("deg " + std::to_string(e.witness.gamma)) << "];\n";
    os << "}\n";
    return os.str();
}

std::string poset_to_json(const PosetReport& report)
{
    Json nodes = Json::array();
    for (const auto& n : report.nodes)
        nodes.push_back(Json{{"label", n.label},
                             {"members", n.members},
                             {"n", n.set.size()},
                             {"invariant", encode_invariant(n.invariant)},
                             {"key", n.invariant.key()},
                             {"chi", n.chi ? Json(*n.chi) : Json(nullptr)},
                             {"exceptional", n.exceptional}});
    Json edges = Json::array();
    for (const auto& e : report.edges)
        edges.push_back(Json{{"source", report.nodes[e.source].label},
                             {"target", report.nodes[e.target].label},
                             {"degree", e.witness.gamma},
                             {"witness", encode_reduction(e.witness)}});
    return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}}.dump(2);
}

}  // namespace polyred
