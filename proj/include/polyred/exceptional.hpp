#pragma once

// Sets with a non-trivial group of characteristic permutations. Such a set
// is a union of s regular r-gons sharing one barycentre, possibly together
// with the barycentre itself.

#include <cstddef>
#include <span>
#include <vector>

#include "polyred/classes.hpp"

namespace polyred {

struct ExceptionalStructure {
    std::size_t r = 0;
    std::size_t s = 0;
    FieldElement barycenter;
    /// Vertex cycles x, g(x), g(g(x)), ... ordered by their first vertex.
    std::vector<std::vector<FieldElement>> gons;
    bool includes_barycenter = false;
    /// Generator of the stabilizer: eps X + c with eps of order group_order.
    LinearPoly generator;
    std::size_t group_order = 0;
};

/// Requires n >= 3.
bool is_exceptional(const FiniteSubset& b);

/// Throws PreconditionError when b is not exceptional.
ExceptionalStructure decompose(const FiniteSubset& b);

/// Multiplicative order of x, or 0 when x is not a root of unity of order
/// at most the field's order.
std::size_t root_of_unity_order(const FieldElement& x);

/// Orbits of x -> eps x + c, eps = zeta^epsilon_exponent, through the
/// seeds base_vertices with c = second_vertex - eps * base_vertices[0].
/// Appends the barycentre c / (1 - eps) on request.
FiniteSubset generate_exceptional(std::size_t r, std::size_t s, long epsilon_exponent,
                                  std::span<const FieldElement> base_vertices, const FieldElement& second_vertex,
                                  bool include_barycenter);

/// True iff b_i + b_pairing[i] is the same for every i; pairing must be an
/// involution on the index set.
bool order2_criterion(const FiniteSubset& b, std::span<const std::size_t> pairing);

}  // namespace polyred
