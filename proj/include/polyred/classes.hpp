#pragma once

/*
 * Equal-cardinality bireducibility.
 *
 * Two n-element sets reduce to each other exactly when some linear map
 * cX + c' carries one onto the other, so a class is an orbit of the affine
 * group. A linear map is fixed by its values at two points; every search
 * here anchors on the two smallest elements (in the field's total order) and
 * tries all n(n-1) ordered target pairs.
 *
 * The complete invariant is the lambda-tuple: for an ordered pair (b1, b2)
 * the ratios (b1 - bj) / (b1 - b2) over the remaining elements. The
 * canonical invariant is the least sorted lambda-tuple over all ordered
 * pairs.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyred/field.hpp"
#include "polyred/polynomial.hpp"

namespace polyred {

// A non-empty finite set, stored strictly ascending in the total order.
class FiniteSubset {
public:
    /// Throws PreconditionError on duplicates or an empty input.
    explicit FiniteSubset(std::vector<FieldElement> elems);
    /// Collapses repeated values instead of rejecting them.
    static FiniteSubset from_values(std::vector<FieldElement> values);

    std::size_t size() const noexcept { return elems_.size(); }
    const std::vector<FieldElement>& elems() const noexcept { return elems_; }
    const FieldElement& operator[](std::size_t i) const { return elems_[i]; }
    const FieldRef& field() const noexcept { return elems_.front().field(); }

    bool contains(const FieldElement& x) const;
    /// Position of x in elems(), or size() when absent.
    std::size_t index_of(const FieldElement& x) const;

    FiniteSubset image(const LinearPoly& p) const;
    /// Set of values p(a); may be smaller than *this.
    FiniteSubset image(const Polynomial& p) const;

    friend bool operator==(const FiniteSubset& a, const FiniteSubset& b);

private:
    std::vector<FieldElement> elems_;
};

struct ClassInvariant {
    std::size_t n = 0;
    /// Sorted ascending; empty for n <= 2.
    std::vector<FieldElement> lambdas;

    /// Stable JSON text {"n":..,"lambdas":[..]}; equal keys <=> equal invariants.
    std::string key() const;

    friend bool operator==(const ClassInvariant& a, const ClassInvariant& b);
};

struct Stabilizer {
    /// The group H_B of linear maps with P(B) = B, ordered by (c, c').
    std::vector<LinearPoly> maps;
    std::size_t order = 0;
    /// Degree-one coefficient of each map, aligned with `maps`.
    std::vector<FieldElement> y_values;
};

struct LinearMaps {
    std::vector<LinearPoly> maps;
    /// Singletons admit a one-parameter family of maps; only X + (b - a) is listed.
    bool one_parameter_family = false;
};

/// All linear P with P(A) = B.
LinearMaps linear_maps_between(const FiniteSubset& a, const FiniteSubset& b);

bool equivalent(const FiniteSubset& a, const FiniteSubset& b);

/// (b_i1 - b_j) / (b_i1 - b_i2) over j != i1, i2, sorted ascending.
std::vector<FieldElement> lambda_tuple(const FiniteSubset& b, std::size_t i1, std::size_t i2);

ClassInvariant canonical_invariant(const FiniteSubset& b);

Stabilizer stabilizer(const FiniteSubset& b);

/// n! / |G_B|; requires n >= 3.
std::uint64_t chi(const FiniteSubset& b);

/// One ordered tuple (lambda_3, ..., lambda_n) per characteristic plane:
/// the distinct tuples (b_s1 - b_sj) / (b_s1 - b_s2) over all enumerations
/// s of B, sorted lexicographically. There are chi(B) of them. Cost grows
/// like n!, so n is capped at 9.
std::vector<std::vector<FieldElement>> characteristic_lambda_points(const FiniteSubset& b);

// A point (u : v) of the projective line, scaled so the first non-zero
// entry is 1.
struct ProjectivePair {
    FieldElement u;
    FieldElement v;
};

/// (W2^3 : W3^2) for a 3-set, where Wl is the l-th power sum of the
/// elements centred at their mean.
ProjectivePair sigma3_coordinate(const FiniteSubset& b);

std::uint64_t factorial(std::size_t n);

}  // namespace polyred
