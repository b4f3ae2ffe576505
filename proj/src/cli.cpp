#include "polyred/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>

#include "polyred/encoding.hpp"
#include "polyred/poset.hpp"
#include "polyred/setfile.hpp"
#include "polyred/vandermonde.hpp"

namespace polyred {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::optional<std::size_t> field;
    std::string json_path;
    std::string dot_path;
    std::string denominator_bound = "1000000";
    std::optional<std::size_t> max_degree;
    std::vector<std::string> sets;
    bool all = false;

    std::size_t m = 0, n = 0;
    std::size_t r = 0, s = 0;
    long epsilon_exponent = 0;
    std::string base, second;
    bool barycenter = false;
    std::size_t gamma_plus_1 = 0;
    std::vector<std::size_t> s_vec;
    std::string a_vec;
};

class Context {
public:
    explicit Context(const Options& opt) : opt_(opt)
    {
        if (!opt.file.empty()) {
            file_ = parse_set_file(opt.file);
            if (opt.field && *opt.field != file_->cyclotomic_order)
                throw UsageError("--field " + std::to_string(*opt.field) + " conflicts with the file's order " +
                                 std::to_string(file_->cyclotomic_order));
            field_ = file_->field;
        } else {
            field_ = make_field(opt.field.value_or(1));
        }
    }

    const FieldRef& field() const { return field_; }

    // A label from the file or an inline JSON array of elements.
    FiniteSubset set(const std::string& arg) const
    {
        if (!arg.empty() && arg.front() == '[')
            return decode_set(parse_json(arg), field_);
        if (!file_)
            throw UsageError("set label \"" + arg + "\" needs -f <file>");
        auto it = file_->sets.find(arg);
        if (it == file_->sets.end())
            throw NotFound("no set labelled \"" + arg + "\"");
        return it->second;
    }

    std::vector<std::pair<std::string, FiniteSubset>> all_sets() const
    {
        std::vector<std::pair<std::string, FiniteSubset>> out;
        if (opt_.sets.empty()) {
            if (!file_)
                throw UsageError("poset needs -f <file> or explicit sets");
            for (const auto& kv : file_->sets)
                out.emplace_back(kv.first, kv.second);
        } else {
            for (const auto& s : opt_.sets)
                out.emplace_back(s, set(s));
        }
        return out;
    }

    static Json parse_json(const std::string& text)
    {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("malformed JSON argument: ") + e.what());
        }
    }

private:
    const Options& opt_;
    std::optional<SetFile> file_;
    FieldRef field_;
};

void need_sets(const Options& opt, std::size_t k)
{
    if (opt.sets.size() != k)
        throw UsageError("expected " + std::to_string(k) + " set argument(s), got " + std::to_string(opt.sets.size()));
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot write " + path);
    f << text;
}

using Handler = std::function<Json(const Options&, const Context&, std::ostream&)>;

std::map<std::string, Handler> handlers()
{
    std::map<std::string, Handler> h;
    h["invariant"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 1);
        const ClassInvariant inv = canonical_invariant(c.set(o.sets[0]));
        err << "invariant of " << o.sets[0] << " (n=" << inv.n << ")\n";
        return Json{{"invariant", encode_invariant(inv)}, {"key", inv.key()}};
    };
    h["equiv"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 2);
        const FiniteSubset a = c.set(o.sets[0]), b = c.set(o.sets[1]);
        Json witnesses = Json::array();
        bool eq = a.size() == b.size();
        if (eq) {
            for (const auto& p : linear_maps_between(a, b).maps)
                witnesses.push_back(encode_linear(p));
            eq = !witnesses.empty();
        }
        err << o.sets[0] << (eq ? " is" : " is not") << " equivalent to " << o.sets[1] << "\n";
        return Json{{"equivalent", eq}, {"witnesses", std::move(witnesses)}};
    };
    h["stabilizer"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 1);
        const Stabilizer st = stabilizer(c.set(o.sets[0]));
        Json maps = Json::array();
        for (const auto& p : st.maps)
            maps.push_back(encode_linear(p));
        err << "stabilizer order " << st.order << "\n";
        return Json{{"order", st.order}, {"maps", std::move(maps)}};
    };
    h["chi"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 1);
        const auto x = chi(c.set(o.sets[0]));
        err << "chi = " << x << "\n";
        return Json{{"chi", x}};
    };
    h["exceptional"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 1);
        const bool e = is_exceptional(c.set(o.sets[0]));
        err << o.sets[0] << (e ? " is" : " is not") << " exceptional\n";
        return Json{{"exceptional", e}};
    };
    h["decompose"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 1);
        const ExceptionalStructure e = decompose(c.set(o.sets[0]));
        err << e.s << " regular " << e.r << "-gon(s)" << (e.includes_barycenter ? " plus barycentre" : "") << "\n";
        Json out = encode_exceptional(e);
        out["generator"] = encode_linear(e.generator);
        return out;
    };
    h["gen-exceptional"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 0);
        const Json base = Context::parse_json(o.base);
        if (!base.is_array())
            throw ParseError("--base must be an array of elements");
        std::vector<FieldElement> seeds;
        for (const auto& e : base)
            seeds.push_back(decode_element(e, c.field()));
        const FieldElement second = decode_element(Context::parse_json(o.second), c.field());
        const FiniteSubset b = generate_exceptional(o.r, o.s, o.epsilon_exponent, seeds, second, o.barycenter);
        err << "generated " << b.size() << " elements\n";
        return Json{{"set", encode_set(b)}};
    };
    h["bounds"] = [](const Options& o, const Context&, std::ostream& err) {
        need_sets(o, 0);
        const DegreeWindow w = degree_bounds(o.m, o.n);
        err << w.gammas.size() << " admissible degree(s)\n";
        return Json{{"m", w.m}, {"n", w.n}, {"gammas", w.gammas}};
    };
    h["reduce"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 2);
        const FiniteSubset a = c.set(o.sets[0]), b = c.set(o.sets[1]);
        const auto w = reduction_witness(a, b);
        Json out{{"reduces", w.has_value()}, {"witness", w ? encode_reduction(*w) : Json(nullptr)}};
        if (o.all && b.size() >= 2 && b.size() < a.size()) {
            Json all = Json::array();
            for (const auto& r : find_reductions(a, b))
                all.push_back(encode_reduction(r));
            out["reductions"] = std::move(all);
        }
        err << o.sets[0] << (w ? " reduces" : " does not reduce") << " to " << o.sets[1] << "\n";
        return out;
    };
    h["successors"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 1);
        Json list = Json::array();
        const auto succ = successors(c.set(o.sets[0]), o.max_degree);
        for (const auto& s : succ)
            list.push_back(Json{{"key", s.invariant.key()},
                                {"invariant", encode_invariant(s.invariant)},
                                {"representative", encode_set(s.representative)},
                                {"trivial", s.trivial()},
                                {"witness", s.witness ? encode_reduction(*s.witness) : Json(nullptr)}});
        err << succ.size() << " successor class(es)\n";
        return Json{{"successors", std::move(list)}};
    };
    h["predecessor"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 1);
        Integer bound;
        if (bound.set_str(o.denominator_bound, 10) != 0)
            throw UsageError("--denominator-bound must be an integer");
        const Predecessor p = predecessor_2n_minus_1(c.set(o.sets[0]), bound);
        err << "predecessor with " << p.source.size() << " elements\n";
        return Json{{"source", encode_set(p.source)},
                    {"normalized_target", encode_set(p.normalized_target)},
                    {"normalization", encode_linear(p.normalization)}};
    };
    h["sigma3"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 1);
        const ProjectivePair p = sigma3_coordinate(c.set(o.sets[0]));
        err << "(" << p.u.to_string() << " : " << p.v.to_string() << ")\n";
        return Json{{"u", encode_element(p.u)}, {"v", encode_element(p.v)}};
    };
    h["vdm-rank"] = [](const Options& o, const Context& c, std::ostream& err) {
        need_sets(o, 0);
        const Json a = Context::parse_json(o.a_vec);
        if (!a.is_array())
            throw ParseError("--a must be an array of elements");
        std::vector<FieldElement> pts;
        for (const auto& e : a)
            pts.push_back(decode_element(e, c.field()));
        const EnrichedVandermonde v = build_enriched(o.gamma_plus_1, o.s_vec, pts);
        const std::size_t rank = exact_rank(v.entries);
        err << "rank " << rank << " of " << v.rows << " rows\n";
        return Json{{"rank", rank}, {"rows", v.rows}, {"matrix", encode_matrix(v.entries)}};
    };
    h["poset"] = [](const Options& o, const Context& c, std::ostream& err) {
        const PosetReport rep = build_poset(c.all_sets());
        if (!o.dot_path.empty())
            write_file(o.dot_path, poset_to_dot(rep));
        err << rep.nodes.size() << " class node(s), " << rep.edges.size() << " edge(s)\n";
        return Json::parse(poset_to_json(rep));
    };
    return h;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Polynomial reducibility of finite sets over cyclotomic fields", "polyred"};
    app.require_subcommand(1);

    const auto table = handlers();
    auto common = [&](CLI::App* sub) {
        sub->add_option("-f,--file", opt.file, "JSON set file")->check(CLI::ExistingFile);
        sub->add_option("--field", opt.field, "cyclotomic order N for inline sets")->check(CLI::PositiveNumber);
        sub->add_option("--json", opt.json_path, "also write the JSON result to this path");
    };
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        return sub;
    };

    auto with_sets = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("sets", opt.sets, what);
        return sub;
    };
    with_sets(add("invariant", "canonical lambda invariant"), "set");
    with_sets(add("equiv", "linear equivalence test"), "two sets");
    with_sets(add("stabilizer", "linear maps fixing a set"), "set");
    with_sets(add("chi", "characteristic number n!/|G_B|"), "set");
    with_sets(add("exceptional", "non-trivial stabilizer test"), "set");
    with_sets(add("decompose", "regular gon decomposition"), "set");
    with_sets(add("sigma3", "projective coordinate of a 3-set"), "set");
    with_sets(add("successors", "all classes reachable by reduction"), "set")
        ->add_option("--max-degree", opt.max_degree, "largest degree tried");
    auto* reduce = with_sets(add("reduce", "reduction witness between two sets"), "source and target");
    reduce->add_flag("--all", opt.all, "also list every reduction in the degree window");
    with_sets(add("predecessor", "quadratic (2n-1)-element predecessor"), "set")
        ->add_option("--denominator-bound", opt.denominator_bound, "square-root search bound");
    auto* poset = with_sets(add("poset", "reduction diagram over sets"), "labels (default: all)");
    poset->add_option("--dot", opt.dot_path, "write a DOT rendering here");

    auto* bounds = add("bounds", "admissible degrees between cardinalities");
    bounds->add_option("m", opt.m, "source size")->required();
    bounds->add_option("n", opt.n, "target size")->required();

    auto* gen = add("gen-exceptional", "concentric regular gons");
    gen->add_option("--r", opt.r, "gon order")->required();
    gen->add_option("--s", opt.s, "number of gons")->required();
    gen->add_option("--epsilon-exponent", opt.epsilon_exponent, "eps = zeta^e")->required();
    gen->add_option("--base", opt.base, "JSON array of seed vertices")->required();
    gen->add_option("--second", opt.second, "JSON element: second vertex of the first gon")->required();
    gen->add_flag("--barycenter", opt.barycenter, "append the barycentre");

    auto* vdm = add("vdm-rank", "rank of an enriched Vandermonde matrix");
    vdm->add_option("--gamma-plus-1", opt.gamma_plus_1, "column count")->required();
    vdm->add_option("--s", opt.s_vec, "derivative counts")->required()->expected(1, -1);
    vdm->add_option("--a", opt.a_vec, "JSON array of abscissae")->required();

    // CLI11 reads "[a,b]" as a list, so inline JSON travels as a placeholder.
    std::vector<std::string> inline_json;
    std::vector<std::string> argv_rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        if (!it->empty() && it->front() == '[') {
            inline_json.push_back(*it);
            argv_rev.push_back("@json" + std::to_string(inline_json.size() - 1));
        } else {
            argv_rev.push_back(*it);
        }
    }
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto restore = [&](std::string& v) {
        if (v.rfind("@json", 0) == 0)
            v = inline_json.at(std::stoul(v.substr(5)));
    };
    for (auto& v : opt.sets)
        restore(v);
    restore(opt.base);
    restore(opt.second);
    restore(opt.a_vec);

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const Context ctx(opt);
        const Json result = table.at(name)(opt, ctx, err);
        const std::string text = result.dump(2) + "\n";
        if (!opt.json_path.empty())
            write_file(opt.json_path, text);
        out << text;
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << Json{{"error", e.what()}}.dump() << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace polyred
