#pragma once

// JSON encodings. An element is an array of phi(N) strings "p/q"; every
// other structure is built from element encodings.

#include <json.hpp>

#include "polyred/classes.hpp"
#include "polyred/exceptional.hpp"
#include "polyred/linalg.hpp"
#include "polyred/reduction.hpp"

namespace polyred {

using Json = nlohmann::json;

/// Strict "p/q" with q > 0 and no leading '+'; "p/0" raises the
/// zero-denominator ParseError.
Rational decode_rational(const std::string& text);

Json encode_element(const FieldElement& x);
FieldElement decode_element(const Json& j, const FieldRef& field);

Json encode_set(const FiniteSubset& s);
/// Throws ParseError on duplicates.
FiniteSubset decode_set(const Json& j, const FieldRef& field);

Json encode_polynomial(const Polynomial& p);
Json encode_linear(const LinearPoly& p);
Json encode_invariant(const ClassInvariant& inv);
Json encode_reduction(const Reduction& r);
Json encode_exceptional(const ExceptionalStructure& e);
Json encode_matrix(const Matrix& m);

}  // namespace polyred
