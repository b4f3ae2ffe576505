#pragma once

// Polynomial reductions A = P^-1(B) between finite sets of different size.
//
// A reduction from an m-set onto an n-set has a degree gamma with
// m/n <= gamma <= (m-1)/(n-1). Candidates come from labelling A's elements
// with targets in B and interpolating; every candidate is then certified by
// multiplicity counting, which proves that P - b has no roots outside A
// without factoring anything.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyred/classes.hpp"

namespace polyred {

struct DegreeWindow {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::size_t> gammas;
};

struct FiberEntry {
    FieldElement a;
    std::size_t multiplicity;
};

struct Fiber {
    FieldElement target;
    std::vector<FiberEntry> preimages;
};

struct Reduction {
    Polynomial poly;
    FiniteSubset source;
    FiniteSubset target;
    std::size_t gamma;
    /// One fiber per element of target, in target order.
    std::vector<Fiber> fibers;
};

/// Requires 2 <= n < m.
DegreeWindow degree_bounds(std::size_t m, std::size_t n);

/// P(A) = B and, for every b, the multiplicities of P - b at its preimages
/// in A add up to deg P. Throws on constant P.
bool check_exact_preimage(const Polynomial& p, const FiniteSubset& a, const FiniteSubset& b);

/// The certified reduction, or nothing when check_exact_preimage fails.
std::optional<Reduction> make_reduction(const Polynomial& p, const FiniteSubset& a, const FiniteSubset& b);

/// Every reduction A -> B with 2 <= |B| < |A|, ordered by degree and then
/// by coefficients.
std::vector<Reduction> find_reductions(const FiniteSubset& a, const FiniteSubset& b);

/// Reductions of one exact degree gamma. Accepts any 2 <= |B| <= |A| with
/// |A| >= gamma + 1, so equal-cardinality pairs can be searched too.
/// With first_only set the search stops at the first hit.
std::vector<Reduction> search_reductions(const FiniteSubset& a, const FiniteSubset& b, std::size_t gamma,
                                         bool first_only = false);

/// Some reduction A -> B, covering every cardinality case, or nothing.
std::optional<Reduction> reduction_witness(const FiniteSubset& a, const FiniteSubset& b);

bool reduces(const FiniteSubset& a, const FiniteSubset& b);

struct Successor {
    ClassInvariant invariant;
    FiniteSubset representative;
    /// Empty for the trivial successors [A] and the one-point class.
    std::optional<Reduction> witness;

    bool trivial() const noexcept { return !witness.has_value(); }
};

/// All classes reachable from A, ordered by (n, invariant key). Degrees
/// 2..max_degree are tried; the default max_degree is m - 1, which is the
/// largest degree any window admits.
std::vector<Successor> successors(const FiniteSubset& a, std::optional<std::size_t> max_degree = std::nullopt);

/// Two smallest elements sent to 0 and 1, together with the map doing it.
std::pair<FiniteSubset, LinearPoly> normalize_to_contain_0_1(const FiniteSubset& a);

struct Predecessor {
    FiniteSubset source;            // {0, +-1, +-sqrt(b_3), ...}
    FiniteSubset normalized_target; // linear image of B containing 0 and 1
    LinearPoly normalization;       // B -> normalized_target
};

/// The (2n-1)-set reducing to [B] by X^2. Throws NotFound when a square
/// root is not found within the denominator bound.
Predecessor predecessor_2n_minus_1(const FiniteSubset& b, const Integer& denominator_bound);

}  // namespace polyred
