#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyred/linalg.hpp"

namespace polyred {

// Vandermonde matrix with derivative rows. Block l holds the row
// (a_l^j)_j followed by its first s_l derivatives in a_l, so the kernel is
// the set of polynomials vanishing to order s_l + 1 at every a_l.
struct EnrichedVandermonde {
    std::size_t gamma_plus_1 = 0;
    std::vector<std::size_t> s_vec;
    std::vector<FieldElement> a_vec;
    std::size_t rows = 0;
    Matrix entries;
};

/// Entry (r_l + s, j) is j (j-1) ... (j-s+1) a_l^(j-s). Requires distinct
/// a's and sum(s) + h <= gamma_plus_1.
EnrichedVandermonde build_enriched(std::size_t gamma_plus_1, std::span<const std::size_t> s_vec,
                                   std::span<const FieldElement> a_vec);

/// Bareiss elimination with full pivoting. Independent of solve_linear.
std::size_t exact_rank(const Matrix& m);

}  // namespace polyred
