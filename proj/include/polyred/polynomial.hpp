#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyred/field.hpp"

namespace polyred {

// Degree of a polynomial; the zero polynomial has degree minus infinity,
// which compares below every natural number.
class Degree {
public:
    constexpr Degree() = default;  // minus infinity
    constexpr explicit Degree(std::size_t value) : value_(value) {}

    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_minus_infinity() const noexcept { return !value_.has_value(); }
    std::size_t value() const;

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b)
    {
        if (a.is_minus_infinity() && b.is_minus_infinity())
            return std::strong_ordering::equal;
        if (a.is_minus_infinity())
            return std::strong_ordering::less;
        if (b.is_minus_infinity())
            return std::strong_ordering::greater;
        return *a.value_ <=> *b.value_;
    }

private:
    std::optional<std::size_t> value_;
};

// Dense univariate polynomial with ascending coefficients; trailing zero
// coefficients are always trimmed.
class Polynomial {
public:
    explicit Polynomial(FieldRef field);
    Polynomial(FieldRef field, std::vector<FieldElement> coeffs);

    static Polynomial constant(const FieldElement& c);
    static Polynomial x(FieldRef field);
    /// c * X^k
    static Polynomial monomial(const FieldElement& c, std::size_t k);
    /// prod (X - root)^multiplicity
    static Polynomial from_roots(FieldRef field, std::span<const FieldElement> roots,
                                 std::span<const std::size_t> multiplicities);

    const FieldRef& field() const noexcept { return field_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement coeff(std::size_t k) const;

    Degree degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const FieldElement& leading() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const FieldElement& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    void trim();

    FieldRef field_;
    std::vector<FieldElement> coeffs_;
};

FieldElement eval(const Polynomial& p, const FieldElement& x);

/// order-th formal derivative.
Polynomial derivative(const Polynomial& p, std::size_t order = 1);

/// Largest e with (X - a)^e | p, found as the first derivative order not
/// vanishing at a (valid in characteristic zero). Throws on p == 0.
std::size_t root_multiplicity(const Polynomial& p, const FieldElement& a);

/// p(q(X))
Polynomial compose(const Polynomial& p, const Polynomial& q);

// The affine map cX + c' with c != 0.
class LinearPoly {
public:
    LinearPoly(FieldElement c, FieldElement c_prime);

    static LinearPoly identity(FieldRef field);
    /// The unique map sending x0 -> y0 and x1 -> y1 (x0 != x1, y0 != y1).
    static LinearPoly through(const FieldElement& x0, const FieldElement& y0, const FieldElement& x1,
                              const FieldElement& y1);

    const FieldElement& c() const noexcept { return c_; }
    const FieldElement& c_prime() const noexcept { return c_prime_; }

    FieldElement operator()(const FieldElement& x) const { return c_ * x + c_prime_; }
    LinearPoly inverse() const;
    /// (*this)(inner(X))
    LinearPoly after(const LinearPoly& inner) const;
    Polynomial to_polynomial() const;
    bool is_identity() const;

    friend bool operator==(const LinearPoly& a, const LinearPoly& b) = default;

private:
    FieldElement c_;
    FieldElement c_prime_;
};

/// Orders maps by (c, c') under the field's total order.
std::strong_ordering linear_cmp(const LinearPoly& a, const LinearPoly& b);

}  // namespace polyred
