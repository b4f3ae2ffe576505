#pragma once

// Diagram of the reduction preorder over a family of labelled sets.
// Equivalent sets are merged first; the edges are the transitive reduction
// of the remaining strict order, each with a certified witness.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyred/reduction.hpp"

namespace polyred {

struct PosetNode {
    std::string label;  // first member in label order
    std::vector<std::string> members;
    FiniteSubset set;
    ClassInvariant invariant;
    std::optional<std::uint64_t> chi;  // only for n >= 3
    bool exceptional = false;
};

struct PosetEdge {
    std::size_t source;
    std::size_t target;
    Reduction witness;
};

struct PosetReport {
    std::vector<PosetNode> nodes;
    /// relation[i][j]: node i reduces to node j (i != j).
    std::vector<std::vector<bool>> relation;
    std::vector<PosetEdge> edges;
};

/// Inputs are processed in label order.
PosetReport build_poset(std::vector<std::pair<std::string, FiniteSubset>> sets);

std::string poset_to_dot(const PosetReport& report);
std::string poset_to_json(const PosetReport& report);

}  // namespace polyred
