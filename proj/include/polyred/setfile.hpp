#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>

#include "polyred/classes.hpp"

namespace polyred {

// {"cyclotomic_order": N, "sets": {label: [element, ...]}}
struct SetFile {
    std::size_t cyclotomic_order = 1;
    FieldRef field;
    std::map<std::string, FiniteSubset> sets;
};

SetFile parse_set_text(const std::string& text);
SetFile parse_set_file(const std::filesystem::path& path);

/// Canonical text: two-space indentation, sorted labels and elements, and a
/// trailing newline. Canonical files round-trip byte for byte.
std::string emit_set_file(const SetFile& file);

}  // namespace polyred
