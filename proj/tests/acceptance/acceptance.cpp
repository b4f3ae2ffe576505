// One line per acceptance criterion; exit status is non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "polyred/exceptional.hpp"
#include "polyred/poset.hpp"
#include "polyred/reduction.hpp"
#include "polyred/vandermonde.hpp"
#include "test_support.hpp"

using namespace testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// ---- 1 ---------------------------------------------------------------

Outcome sigma3_landscape()
{
    Outcome o;
    const FieldRef f = make_field(12);
    const FiniteSubset half = set_of({q(f, 0), q(f, 1), q(f, 1, 2)});
    const FiniteSubset two = rationals(f, {0, 1, 2});
    const FiniteSubset minus = rationals(f, {0, 1, -1});
    const ClassInvariant inv = canonical_invariant(two);
    o.require(canonical_invariant(half) == inv && canonical_invariant(minus) == inv, "invariants differ");
    o.require(is_exceptional(two) && chi(two) == 3, "{0,1,2} should be exceptional with chi 3");

    // lambda_3 runs through 1/2, 2, -1 over the enumerations.
    std::vector<std::vector<FieldElement>> expected{{q(f, -1)}, {q(f, 1, 2)}, {q(f, 2)}};
    std::sort(expected.begin(), expected.end(), [](const auto& x, const auto& y) { return tuple_cmp(x, y) < 0; });
    o.require(characteristic_lambda_points(two) == expected, "lambda_3 values are not {1/2, 2, -1}");

    const FiniteSubset hex = set_of({q(f, 0), q(f, 1), z(f, 2)});
    o.require(stabilizer(hex).order == 3, "stabilizer of {0,1,zeta6} should have order 3");
    o.require(chi(hex) == 2, "chi of {0,1,zeta6} should be 2");
    o.require(equivalent(hex, set_of({q(f, 0), q(f, 1), z(f, 10)})), "{0,1,zeta6} not equivalent to conjugate");
    return o;
}

// ---- 2 ---------------------------------------------------------------

Outcome linear_reduction()
{
    Outcome o;
    const FieldRef f = make_field(12);
    Random rng(20221001);
    for (int i = 0; i < 200; ++i)
        o.require(equivalent(rng.set(f, 2, 50, 9), rng.set(f, 2, 50, 9)), "two 2-sets not equivalent");
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 3 + static_cast<std::size_t>(i % 3);
        const FiniteSubset a = rng.set(f, n, 20, 5);
        const FiniteSubset b = a.image(rng.linear(f));
        std::size_t linear = 0;
        for (std::size_t g = 1; g + 1 <= n; ++g)
            for (const auto& r : search_reductions(a, b, g)) {
                o.require(r.gamma == 1, "non-linear witness between equal cardinalities");
                ++linear;
            }
        o.require(linear >= 1, "no linear witness for an equivalent pair");
    }
    return o;
}

// ---- 3 ---------------------------------------------------------------

Outcome invariant_oracle()
{
    Outcome o;
    const FieldRef f = make_field(12);
    Random rng(20221002);
    std::size_t agree_eq = 0, agree_neq = 0;
    for (std::size_t n = 3; n <= 5; ++n)
        for (int i = 0; i < 500; ++i) {
            const FiniteSubset a = rng.set(f, n, 3, 2);
            FiniteSubset b = a;
            switch (i % 3) {
            case 0:
                b = a.image(rng.linear(f));
                break;
            case 1:
                b = rng.set(f, n, 3, 2);
                break;
            default: {
                // Move one point: close to a but usually inequivalent.
                std::vector<FieldElement> v(a.elems());
                v[0] = v[0] + q(f, 1);
                b = FiniteSubset::from_values(v);
                if (b.size() != n)
                    b = a;
            }
            }
            const bool e = equivalent(a, b);
            const bool k = canonical_invariant(a) == canonical_invariant(b);
            o.require(e == k, "search and invariant disagree at n = " + std::to_string(n));
            (e ? agree_eq : agree_neq) += 1;
        }
    o.require(agree_eq > 0 && agree_neq > 0, "sample lacks one of the two outcomes");
    return o;
}

// ---- 4 ---------------------------------------------------------------

Outcome chi_values()
{
    Outcome o;
    const FieldRef f = make_field(60);
    Random rng(20221003);
    for (std::size_t n = 4; n <= 6; ++n) {
        std::set<std::uint64_t> expected, realized;
        for (std::size_t r = 1; r <= n; ++r)
            if (n % r == 0 || (n - 1) % r == 0)
                expected.insert(factorial(n) / r);

        std::vector<FiniteSubset> tested;
        for (int i = 0; i < 3; ++i)
            tested.push_back(rng.set(f, n, 9, 3));  // trivial stabilizer
        for (std::size_t r = 2; r <= n; ++r) {
            const bool whole = n % r == 0;
            if (!whole && (n - 1) % r != 0)
                continue;
            const std::size_t s = whole ? n / r : (n - 1) / r;
            const long e = 60 / static_cast<long>(r);
            // C_h = {h, eps h, ...} for s unrelated seeds h, plus 0 when r | n-1.
            std::vector<FieldElement> seeds;
            for (std::size_t u = 0; u < s; ++u)
                seeds.push_back(rng.nonzero(f, 5, 2));
            const FieldElement second = FieldElement::zeta_power(f, e) * seeds[0];
            try {
                tested.push_back(generate_exceptional(r, s, e, seeds, second, !whole));
            } catch (const PreconditionError&) {
                o.require(false, "degenerate seeds for r = " + std::to_string(r));
            }
        }
        for (const auto& b : tested) {
            const std::uint64_t x = chi(b);
            realized.insert(x);
            o.require(expected.count(x) == 1, "unexpected chi " + std::to_string(x));
        }
        o.require(realized == expected, "not every chi value realized for n = " + std::to_string(n));
    }
    return o;
}

// ---- 5 ---------------------------------------------------------------

Outcome exceptional_round_trip()
{
    Outcome o;
    const FieldRef f = make_field(12);
    Random rng(20221004);
    const std::size_t orders[] = {2, 3, 4, 6};
    const long exps[] = {6, 4, 3, 2};  // zeta_12^e has order r
    int done = 0;
    while (done < 100) {
        const std::size_t pick = static_cast<std::size_t>(rng.integer(0, 3));
        const std::size_t r = orders[pick];
        const std::size_t s = static_cast<std::size_t>(rng.integer(1, 3));
        const bool bary = rng.integer(0, 1) == 1;
        if (s * r + bary < 3)
            continue;
        std::vector<FieldElement> seeds;
        for (std::size_t u = 0; u < s; ++u)
            seeds.push_back(rng.element(f, 1000, 97));
        const FieldElement second = rng.element(f, 1000, 97);
        const FieldElement eps = FieldElement::zeta_power(f, exps[pick]);
        std::optional<FiniteSubset> b;
        try {
            b = generate_exceptional(r, s, exps[pick], seeds, second, bary);
        } catch (const PreconditionError&) {
            continue;  // collision: redraw
        }
        const ExceptionalStructure e = decompose(*b);
        const FieldElement barycenter = (second - eps * seeds[0]) / (q(f, 1) - eps);
        o.require(e.r == r && e.s == s && e.includes_barycenter == bary && e.barycenter == barycenter,
                  "round trip failed for r = " + std::to_string(r) + ", s = " + std::to_string(s));
        o.require(e.group_order % e.r == 0, "group order not a multiple of r");
        ++done;
    }
    return o;
}

// ---- 6 ---------------------------------------------------------------

Outcome window_exclusion()
{
    Outcome o;
    const FieldRef f = make_field(4);
    Random rng(20221005);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{4, 3}, {6, 5}}) {
        o.require(degree_bounds(m, n).gammas.empty(), "window unexpectedly non-empty");
        for (int i = 0; i < 50; ++i) {
            const FiniteSubset a = rng.set(f, m, 4, 2);
            std::vector<FieldElement> img;
            if (i % 2 == 0) {
                // Targets drawn from the image of A under a random quadratic.
                const Polynomial p(f, {rng.element(f), rng.element(f), rng.nonzero(f)});
                for (const auto& x : a.elems())
                    img.push_back(eval(p, x));
            }
            while (FiniteSubset::from_values(img.empty() ? std::vector{rng.element(f)} : img).size() < n)
                img.push_back(rng.element(f, 4, 2));
            FiniteSubset b = FiniteSubset::from_values(img);
            b = FiniteSubset(std::vector<FieldElement>(b.elems().begin(), b.elems().begin() + n));
            o.require(find_reductions(a, b).empty(), "reduction found across an empty window");
            // Exhaustive search over every degree the source admits.
            for (std::size_t g = 1; g + 1 <= m; ++g)
                o.require(search_reductions(a, b, g).empty(), "exhaustive search found a reduction");
        }
    }
    return o;
}

// ---- 7 ---------------------------------------------------------------

Outcome quadratic_predecessor()
{
    Outcome o;
    const FieldRef f = make_field(4);
    Random rng(20221006);
    for (int i = 0; i < 25; ++i) {
        FieldElement y = rng.nonzero(f, 6, 3);
        while ((y * y).is_zero() || (y * y).is_one())
            y = rng.nonzero(f, 6, 3);
        FiniteSubset b = set_of({q(f, 0), q(f, 1), y * y});
        if (i % 2)
            b = b.image(rng.linear(f));
        const Predecessor p = predecessor_2n_minus_1(b, Integer(1000000));
        const FiniteSubset& a = p.source;
        o.require(a.size() == 5, "predecessor should have 5 elements");
        o.require(is_exceptional(a) && stabilizer(a).order % 2 == 0, "predecessor lacks an even stabilizer");
        std::size_t threes = 0;
        for (const auto& s : successors(a))
            if (s.invariant.n == 3) {
                ++threes;
                o.require(equivalent(s.representative, b), "cardinality-3 successor is not [B]");
            }
        o.require(threes == 1, "expected exactly one cardinality-3 successor, got " + std::to_string(threes));
    }
    return o;
}

// ---- 8 ---------------------------------------------------------------

Outcome roots_of_unity_lattice()
{
    Outcome o;
    const FieldRef f = make_field(12);
    const std::vector<long> ds{1, 2, 3, 4, 6, 12};
    std::vector<std::pair<std::string, FiniteSubset>> sets;
    for (long d : ds)
        sets.emplace_back("mu" + std::to_string(d), mu(f, d));
    const PosetReport rep = build_poset(sets);
    o.require(rep.nodes.size() == ds.size(), "roots of unity merged into fewer classes");

    std::map<std::string, long> order;
    for (long d : ds)
        order["mu" + std::to_string(d)] = d;
    // mu_d reduces to mu_e iff mu_e is inside mu_d, i.e. e | d.
    std::set<std::pair<long, long>> hasse, got;
    for (long d : ds)
        for (long e : ds) {
            if (d == e || d % e != 0)
                continue;
            bool covered = true;
            for (long g : ds)
                if (g != d && g != e && d % g == 0 && g % e == 0)
                    covered = false;
            if (covered)
                hasse.emplace(d, e);
        }
    for (std::size_t i = 0; i < rep.nodes.size(); ++i)
        for (std::size_t j = 0; j < rep.nodes.size(); ++j) {
            const long d = order[rep.nodes[i].label], e = order[rep.nodes[j].label];
            if (i != j)
                o.require(rep.relation[i][j] == (d % e == 0), "relation differs from reverse inclusion");
        }
    for (const auto& e : rep.edges) {
        got.emplace(order[rep.nodes[e.source].label], order[rep.nodes[e.target].label]);
        o.require(check_exact_preimage(e.witness.poly, rep.nodes[e.source].set, rep.nodes[e.target].set),
                  "edge witness does not verify");
    }
    o.require(got == hasse, "edges differ from the covering relation of reverse inclusion");
    return o;
}

// ---- 9 ---------------------------------------------------------------

Outcome enriched_vandermonde()
{
    Outcome o;
    const FieldRef f = make_field(1);
    Random rng(20221007);
    int done = 0;
    while (done < 200) {
        const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 10));
        const std::size_t h = static_cast<std::size_t>(rng.integer(1, 4));
        std::vector<std::size_t> s;
        std::size_t rows = 0;
        for (std::size_t l = 0; l < h; ++l) {
            s.push_back(static_cast<std::size_t>(rng.integer(0, 3)));
            rows += s.back() + 1;
        }
        if (rows > cols)
            continue;
        const FiniteSubset a = rng.set(f, h, 30, 7);
        const EnrichedVandermonde v = build_enriched(cols, s, a.elems());
        o.require(exact_rank(v.entries) == rows, "rank below R");
        ++done;
    }
    return o;
}

// ---- 10 --------------------------------------------------------------

// Classes reachable from A, found by choosing the fibers directly: a
// partition of A into n blocks and multiplicities e_a summing to gamma in
// every block. P - b_k is the product over block k, so all these products
// must differ by constants.
std::set<std::string> fiber_partition_classes(const FiniteSubset& a)
{
    const std::size_t m = a.size();
    const FieldRef& f = a.field();
    std::set<std::string> out;
    std::vector<std::size_t> block(m, 0);

    std::function<void(std::size_t, std::size_t, std::size_t)> partitions;
    std::vector<std::vector<std::size_t>> found_partitions;
    partitions = [&](std::size_t i, std::size_t used, std::size_t target) {
        if (i == m) {
            if (used == target)
                found_partitions.push_back(block);
            return;
        }
        for (std::size_t k = 0; k <= used && k < target; ++k) {
            block[i] = k;
            partitions(i + 1, std::max(used, k + 1), target);
        }
    };

    for (std::size_t n = 2; n < m; ++n) {
        found_partitions.clear();
        partitions(0, 0, n);
        for (std::size_t gamma = 1; gamma <= m; ++gamma) {
            if (gamma * n < m || gamma * (n - 1) > m - 1)
                continue;
            for (const auto& part : found_partitions) {
                std::vector<std::vector<std::size_t>> members(n);
                for (std::size_t i = 0; i < m; ++i)
                    members[part[i]].push_back(i);
                if (std::any_of(members.begin(), members.end(), [&](const auto& b) { return b.size() > gamma; }))
                    continue;
                // Multiplicity choices per block.
                std::vector<std::vector<Polynomial>> options(n);
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& mem = members[k];
                    std::vector<std::size_t> e(mem.size(), 1);
                    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t left) {
                        if (pos + 1 == mem.size()) {
                            e[pos] = left;
                            std::vector<FieldElement> roots;
                            for (std::size_t i : mem)
                                roots.push_back(a[i]);
                            options[k].push_back(Polynomial::from_roots(f, roots, e));
                            return;
                        }
                        for (std::size_t v = 1; v + (mem.size() - pos - 1) <= left; ++v) {
                            e[pos] = v;
                            fill(pos + 1, left - v);
                        }
                    };
                    fill(0, gamma);
                }
                for (const auto& q1 : options[0]) {
                    std::vector<FieldElement> values{FieldElement::zero(f)};
                    bool ok = true;
                    for (std::size_t k = 1; k < n && ok; ++k) {
                        ok = false;
                        for (const auto& qk : options[k]) {
                            const Polynomial d = q1 - qk;
                            if (d.is_constant()) {
                                values.push_back(d.coeff(0));
                                ok = true;
                                break;  // Q_k is then determined by Q_1
                            }
                        }
                    }
                    if (!ok)
                        continue;
                    const FiniteSubset b = FiniteSubset::from_values(values);
                    if (b.size() == n)
                        out.insert(canonical_invariant(b).key());
                }
            }
        }
    }
    return out;
}

Outcome successor_completeness()
{
    Outcome o;
    const FieldRef f = make_field(12);
    Random rng(20221008);
    std::size_t nontrivial = 0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t m = static_cast<std::size_t>(rng.integer(3, 6));
        FiniteSubset a = rng.set(f, m, 5, 2);
        switch (i % 4) {
        case 1: {  // symmetric about a point
            std::vector<FieldElement> v;
            if (m % 2)
                v.push_back(q(f, 0));
            while (v.size() < m) {
                const FieldElement x = rng.nonzero(f, 5, 2);
                if (std::find(v.begin(), v.end(), x) == v.end() && std::find(v.begin(), v.end(), -x) == v.end()) {
                    v.push_back(x);
                    v.push_back(-x);
                }
            }
            a = FiniteSubset(v).image(rng.linear(f));
            break;
        }
        case 2: {  // a regular gon, maybe with its centre
            const std::size_t r = m >= 4 ? m - m % 2 : 3;
            const long e = 12 / static_cast<long>(r == 5 ? 4 : r);
            const std::size_t rr = r == 5 ? 4 : r;
            std::vector<FieldElement> seed{rng.nonzero(f, 5, 2)};
            try {
                a = generate_exceptional(rr, 1, e, seed, rng.element(f, 5, 2), m > rr);
            } catch (const PreconditionError&) {
            }
            break;
        }
        case 3:  // critical values of a cubic: {-2, -1, 1, 2} and relatives
            a = rationals(f, {-2, -1, 1, 2}).image(rng.linear(f));
            break;
        default:
            break;
        }
        const auto succ = successors(a);
        std::set<std::string> listed;
        for (const auto& s : succ) {
            if (s.witness) {
                o.require(check_exact_preimage(s.witness->poly, a, s.representative), "witness fails to verify");
                listed.insert(s.invariant.key());
                ++nontrivial;
            }
        }
        const std::set<std::string> oracle = fiber_partition_classes(a);
        for (const auto& k : oracle)
            o.require(listed.count(k) == 1, "fiber-partition search found an unlisted class " + k);
        for (const auto& k : listed)
            o.require(oracle.count(k) == 1, "listed class missed by the fiber-partition search");
    }
    o.require(nontrivial > 0, "sample produced no non-trivial successors");
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "sigma3 landscape", 1, sigma3_landscape},
        {2, "equal-cardinality reductions are linear", 10, linear_reduction},
        {3, "invariant agrees with linear-map search", 30, invariant_oracle},
        {4, "realized chi values", 10, chi_values},
        {5, "exceptional round trip", 10, exceptional_round_trip},
        {6, "empty degree window excludes reductions", 10, window_exclusion},
        {7, "quadratic predecessor uniqueness", 30, quadratic_predecessor},
        {8, "roots-of-unity lattice", 30, roots_of_unity_lattice},
        {9, "enriched Vandermonde full rank", 20, enriched_vandermonde},
        {10, "successor soundness and completeness", 60, successor_completeness},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (out.ok && secs > c.limit_s) {
            out.ok = false;
            out.detail = "time limit exceeded";
        }
        failures += !out.ok;
        std::printf("[%s] %2d %s (%.2f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_s, out.ok ? "" : ": ", out.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
