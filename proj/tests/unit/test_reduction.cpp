#include <doctest.h>

#include <algorithm>
#include <set>

#include "polyred/exceptional.hpp"
#include "polyred/reduction.hpp"
#include "test_support.hpp"

using namespace testing;

namespace {

Polynomial poly(const FieldRef& f, std::initializer_list<long> coeffs)
{
    std::vector<FieldElement> c;
    for (long x : coeffs)
        c.push_back(q(f, x));
    return Polynomial(f, std::move(c));
}

bool contains_poly(const std::vector<Reduction>& rs, const Polynomial& p)
{
    return std::any_of(rs.begin(), rs.end(), [&](const Reduction& r) { return r.poly == p; });
}

// {+-1, +-a_2, ..., +-a_n}: exceptional with the reflection -X.
FiniteSubset symmetric_set(Random& rng, const FieldRef& f, std::size_t n)
{
    for (;;) {
        std::vector<FieldElement> v{q(f, 1), q(f, -1)};
        for (std::size_t i = 1; i < n; ++i) {
            const FieldElement a = rng.nonzero(f, 6, 3);
            v.push_back(a);
            v.push_back(-a);
        }
        std::vector<FieldElement> sorted = v;
        std::sort(sorted.begin(), sorted.end(), TotalOrderLess{});
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
            return FiniteSubset(std::move(v));
    }
}

}  // namespace

TEST_CASE("degree windows")
{
    CHECK(degree_bounds(5, 3).gammas == std::vector<std::size_t>{2});
    CHECK(degree_bounds(4, 3).gammas.empty());
    CHECK(degree_bounds(12, 4).gammas == std::vector<std::size_t>{3});
    CHECK(degree_bounds(4, 2).gammas == std::vector<std::size_t>{2, 3});
    CHECK_THROWS_AS(degree_bounds(3, 1), PreconditionError);
    CHECK_THROWS_AS(degree_bounds(3, 3), PreconditionError);
}

TEST_CASE("check_exact_preimage examples")
{
    const FieldRef f = make_field(1);
    const Polynomial sq = poly(f, {0, 0, 1});
    CHECK(check_exact_preimage(sq, rationals(f, {1, -1}), rationals(f, {1})));
    CHECK_FALSE(check_exact_preimage(sq, rationals(f, {1}), rationals(f, {1})));
    CHECK(check_exact_preimage(poly(f, {1, -2, 1}), rationals(f, {1}), rationals(f, {0})));
    CHECK_FALSE(check_exact_preimage(sq, rationals(f, {1, 2}), rationals(f, {1})));
    CHECK_THROWS_AS(check_exact_preimage(poly(f, {3}), rationals(f, {1}), rationals(f, {3})), PreconditionError);

    const auto red = make_reduction(poly(f, {1, -2, 1}), rationals(f, {1}), rationals(f, {0}));
    REQUIRE(red);
    CHECK(red->gamma == 2);
    CHECK(red->fibers.at(0).preimages.at(0).multiplicity == 2);
}

TEST_CASE("find_reductions examples")
{
    const FieldRef f4 = make_field(4);
    const Polynomial sq4 = Polynomial::monomial(q(f4, 1), 2);
    CHECK(contains_poly(find_reductions(mu(f4, 4), rationals(f4, {1, -1})), sq4));

    const FieldRef f = make_field(1);
    const auto rs = find_reductions(rationals(f, {0, 1, -1, 2, -2}), rationals(f, {0, 1, 4}));
    CHECK(contains_poly(rs, poly(f, {0, 0, 1})));
    for (const auto& r : rs) {
        CHECK(r.gamma == 2);
        CHECK(check_exact_preimage(r.poly, r.source, r.target));
    }

    const FiniteSubset a = rationals(f, {0, 1, 3, 7});
    const FiniteSubset b = rationals(f, {0, 1, 5});
    CHECK(find_reductions(a, b).empty());
    // Searching every degree the source can carry, window or not.
    for (std::size_t g = 1; g <= 3; ++g)
        CHECK(search_reductions(a, b, g).empty());

    CHECK_THROWS_AS(find_reductions(a, rationals(f, {0})), PreconditionError);
    CHECK_THROWS_AS(find_reductions(b, a), PreconditionError);
}

TEST_CASE("degree-three reductions onto two points")
{
    // X^3 - 3X has critical values -2 and 2:
    // X^3 - 3X - 2 = (X + 1)^2 (X - 2) and X^3 - 3X + 2 = (X - 1)^2 (X + 2).
    const FieldRef f = make_field(1);
    const FiniteSubset a = rationals(f, {-2, -1, 1, 2});
    const auto rs = find_reductions(a, rationals(f, {-2, 2}));
    CHECK(contains_poly(rs, poly(f, {0, -3, 0, 1})));
    std::set<std::size_t> degrees;
    for (const auto& r : rs)
        degrees.insert(r.gamma);
    CHECK(degrees.count(3) == 1);
    MESSAGE("reductions {-2,-1,1,2} -> {-2,2}: " << rs.size());
    // The same source also reaches a 2-set by X^2.
    CHECK(contains_poly(find_reductions(a, rationals(f, {1, 4})), poly(f, {0, 0, 1})));
}

TEST_CASE("reduces across cardinalities")
{
    const FieldRef f = make_field(4);
    Random rng(71);
    const FiniteSubset a = rng.set(f, 4);
    CHECK(reduces(a, rationals(f, {9})));
    const auto w = reduction_witness(a, rationals(f, {9}));
    REQUIRE(w);
    CHECK(w->gamma == 4);
    CHECK_FALSE(reduces(rng.set(f, 3), rng.set(f, 4)));
    CHECK(reduces(mu(f, 4), mu(f, 2)));
    CHECK(reduces(a, a.image(rng.linear(f))));
    CHECK_FALSE(reduces(rationals(f, {0, 1, 3}), rationals(f, {0, 1, 4})));
}

TEST_CASE("successor examples")
{
    const FieldRef f4 = make_field(4);
    auto succ = successors(mu(f4, 4));
    const ClassInvariant two = canonical_invariant(mu(f4, 2));
    auto it = std::find_if(succ.begin(), succ.end(), [&](const Successor& s) { return s.invariant == two; });
    REQUIRE(it != succ.end());
    CHECK_FALSE(it->trivial());

    const FieldRef f = make_field(1);
    succ = successors(rationals(f, {0, 1, 3}));
    REQUIRE(succ.size() == 2);
    CHECK(succ[0].invariant.n == 1);
    CHECK(succ[1].invariant == canonical_invariant(rationals(f, {0, 1, 3})));
    CHECK(succ[0].trivial());
    CHECK(succ[1].trivial());

    const FiniteSubset h = set_of({q(f, 0), q(f, 1), q(f, 1, 2)});
    const FiniteSubset target = set_of({q(f, 0), q(f, -1, 4)});
    const Polynomial p = poly(f, {0, -1, 1});
    CHECK(check_exact_preimage(p, h, target));
    succ = successors(h);
    CHECK(std::any_of(succ.begin(), succ.end(), [&](const Successor& s) {
        return !s.trivial() && equivalent(s.representative, target);
    }));
    CHECK_THROWS_AS(successors(rationals(f, {0})), PreconditionError);
}

TEST_CASE("predecessor examples")
{
    const Integer bound = 1000;
    const FieldRef f = make_field(1);
    CHECK(predecessor_2n_minus_1(rationals(f, {0, 1}), bound).source == rationals(f, {0, 1, -1}));
    CHECK(predecessor_2n_minus_1(rationals(f, {0, 1, 4}), bound).source == rationals(f, {0, 1, -1, 2, -2}));

    const FieldRef f4 = make_field(4);
    const auto p = predecessor_2n_minus_1(rationals(f4, {0, 1, -1}), bound);
    CHECK(p.source == set_of({q(f4, 0), q(f4, 1), q(f4, -1), z(f4, 1), -z(f4, 1)}));

    // Every normalization of {0,1,2} over Q needs sqrt(2), sqrt(-1) or sqrt(1/2).
    CHECK_THROWS_AS(predecessor_2n_minus_1(rationals(f, {0, 1, 2}), bound), NotFound);
    CHECK_THROWS_AS(predecessor_2n_minus_1(rationals(f, {0}), bound), PreconditionError);
}

TEST_CASE("normalize_to_contain_0_1 examples")
{
    const FieldRef f = make_field(1);
    auto [s, l] = normalize_to_contain_0_1(rationals(f, {3, 5}));
    CHECK(s == rationals(f, {0, 1}));
    CHECK(l == LinearPoly(q(f, 1, 2), q(f, -3, 2)));

    std::tie(s, l) = normalize_to_contain_0_1(rationals(f, {0, 1, 7}));
    CHECK(s == rationals(f, {0, 1, 7}));
    CHECK(l.is_identity());

    std::tie(s, l) = normalize_to_contain_0_1(rationals(f, {2, 4, 6}));
    CHECK(s == rationals(f, {0, 1, 2}));
    CHECK(l == LinearPoly(q(f, 1, 2), q(f, -1)));
    CHECK_THROWS_AS(normalize_to_contain_0_1(rationals(f, {2})), PreconditionError);
}

TEST_CASE("equal cardinality reductions are linear")
{
    const FieldRef f = make_field(12);
    Random rng(73);
    for (int t = 0; t < 15; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(3, 5));
        const FiniteSubset a = rng.set(f, n, 5, 2);
        const FiniteSubset b = a.image(rng.linear(f));
        for (std::size_t g = 1; g + 1 <= n; ++g) {
            const auto rs = search_reductions(a, b, g);
            if (g == 1)
                CHECK(rs.size() == stabilizer(a).order);
            else
                CHECK(rs.empty());
        }
    }
}

TEST_CASE("quadratic reductions force an even stabilizer")
{
    const FieldRef f = make_field(4);
    Random rng(79);
    int quadratic = 0;
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = static_cast<std::size_t>(rng.integer(3, 6));
        const FiniteSubset a = t % 2 ? rng.set(f, m, 2, 1) : symmetric_set(rng, f, m / 2 + 1).image(rng.linear(f));
        for (const auto& s : successors(a)) {
            if (!s.witness || s.witness->gamma != 2)
                continue;
            ++quadratic;
            CHECK(is_exceptional(a));
            CHECK(stabilizer(a).order % 2 == 0);
        }
    }
    CHECK(quadratic > 0);
}

TEST_CASE("predecessors are unique and even sets funnel")
{
    const FieldRef f = make_field(4);
    Random rng(83);
    const Integer bound = 1000;
    for (std::size_t n : {3, 4}) {
        for (int t = 0; t < 4; ++t) {
            std::vector<FieldElement> v{q(f, 0), q(f, 1)};
            while (v.size() < n) {
                const FieldElement r = rng.nonzero(f, 4, 2);
                const FieldElement sq = r * r;
                if (std::find(v.begin(), v.end(), sq) == v.end())
                    v.push_back(sq);
            }
            const FiniteSubset b = FiniteSubset(v).image(rng.linear(f));
            const Predecessor p = predecessor_2n_minus_1(b, bound);
            CHECK(p.source.size() == 2 * n - 1);
            std::size_t matching = 0;
            for (const auto& s : successors(p.source))
                if (s.invariant.n == n) {
                    ++matching;
                    CHECK(equivalent(s.representative, b));
                }
            CHECK(matching == 1);
        }
    }

    for (std::size_t n : {2, 3}) {
        for (int t = 0; t < 4; ++t) {
            const FiniteSubset a = symmetric_set(rng, f, n).image(rng.linear(f));
            CHECK(stabilizer(a).order % 2 == 0);
            std::size_t half = 0;
            for (const auto& s : successors(a))
                half += s.invariant.n == n;
            CHECK(half == 1);
        }
    }
}

TEST_CASE("successor witnesses verify and reduces agrees")
{
    const FieldRef f = make_field(6);
    Random rng(89);
    for (int t = 0; t < 6; ++t) {
        const FiniteSubset a = t < 3 ? rng.set(f, 5, 2, 1) : generate_exceptional(3, 1, 2, std::vector{q(f, 1)},
                                                                                   z(f, 2) + q(f, t), t == 4);
        for (const auto& s : successors(a)) {
            if (s.witness)
                CHECK(check_exact_preimage(s.witness->poly, a, s.representative));
            CHECK(reduces(a, s.representative));
        }
    }
}
