#pragma once

/*
 * Exact arithmetic in the cyclotomic field Q(zeta_N).
 *
 * Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) with
 * rational coordinates in lowest terms, so two elements are equal exactly
 * when their coordinate vectors are. Products are reduced modulo the N-th
 * cyclotomic polynomial; inverses come from the extended Euclidean algorithm
 * in Q[X] against that (irreducible) modulus.
 *
 * The field is chosen once per session. Mixing elements of different fields
 * raises FieldMismatch; there are no implicit embeddings between fields.
 */

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "polyred/errors.hpp"

namespace polyred {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" (optionally signed numerator); the result is in lowest terms.
Rational parse_rational(std::string_view text);
/// Always "p/q" with q >= 1, e.g. "-3/1".
std::string format_rational(const Rational& q);

std::size_t euler_phi(std::size_t n);
/// Phi_N with ascending integer coefficients.
std::vector<Integer> cyclotomic_polynomial(std::size_t order);

class CyclotomicField {
public:
    explicit CyclotomicField(std::size_t order);

    std::size_t order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    const std::vector<Integer>& modulus() const noexcept { return modulus_; }

    // X^k mod Phi_N for degree() <= k <= 2*degree()-2; integral since Phi_N is monic.
    const std::vector<Integer>& reduction_row(std::size_t k) const;

private:
    std::size_t order_;
    std::vector<Integer> modulus_;
    std::vector<std::vector<Integer>> reduction_;
};

using FieldRef = std::shared_ptr<const CyclotomicField>;

FieldRef make_field(std::size_t order);

bool same_field(const FieldRef& a, const FieldRef& b) noexcept;

class FieldElement {
public:
    FieldElement(FieldRef field, std::vector<Rational> coords);

    static FieldElement zero(FieldRef field);
    static FieldElement one(FieldRef field);
    static FieldElement from_rational(FieldRef field, const Rational& q);
    static FieldElement from_integer(FieldRef field, long value);
    /// zeta_N^k for any integer k (taken mod N).
    static FieldElement zeta_power(FieldRef field, long k);

    const FieldRef& field() const noexcept { return field_; }
    std::span<const Rational> coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;

    /// Throws DivisionByZero on zero.
    FieldElement inverse() const;
    FieldElement pow(long exponent) const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs);
    friend FieldElement operator/(const FieldElement& lhs, const FieldElement& rhs) { return lhs * rhs.inverse(); }
    friend FieldElement operator-(const FieldElement& x);

    /// Field mismatch is an error here too, never a silent "false".
    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

    /// Short human-readable form such as "1/2 + 3*z^2"; not the wire encoding.
    std::string to_string() const;

private:
    FieldRef field_;
    std::vector<Rational> coords_;
};

void require_same_field(const FieldElement& a, const FieldElement& b);

/// Lexicographic order on coordinates: a fixed total order on the field,
/// used wherever a canonical choice is needed.
std::strong_ordering total_order_cmp(const FieldElement& x, const FieldElement& y);

struct TotalOrderLess {
    bool operator()(const FieldElement& x, const FieldElement& y) const
    {
        return total_order_cmp(x, y) < 0;
    }
};

/// Lexicographic extension of total_order_cmp to tuples (shorter prefix first).
std::strong_ordering tuple_cmp(std::span<const FieldElement> x, std::span<const FieldElement> y);

}  // namespace polyred
