#pragma once

// Multi-precision complex approximations of field elements. These only ever
// guide a search; anything returned to a caller as exact is re-verified in
// exact arithmetic first.

#include <complex>
#include <optional>
#include <string>

#include <mpfr.h>

#include "polyred/field.hpp"

namespace polyred {

// Owning wrapper around an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision);
    BigFloat(mpfr_prec_t precision, double value);
    BigFloat(mpfr_prec_t precision, const Rational& value);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

private:
    mpfr_t value_;
};

struct ComplexApprox {
    BigFloat re;
    BigFloat im;

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// Image of x under zeta -> exp(2*pi*i/N), carried at `precision_bits`
/// (at least 53). Absolute error is below 2^-(precision_bits - 8) times
/// the sum of |coordinates|.
ComplexApprox numeric_embed(const FieldElement& x, long precision_bits);

/// Same, under the conjugate embedding zeta -> exp(2*pi*i*k/N).
ComplexApprox numeric_embed_conjugate(const FieldElement& x, long k, long precision_bits);

/// Searches for y with y*y == x. Each coordinate of a candidate is rebuilt as
/// a continued-fraction convergent with denominator <= denominator_bound and
/// the square is checked exactly. An empty result means "not found", not
/// "does not exist".
std::optional<FieldElement> sqrt_in_field(const FieldElement& x, const Integer& denominator_bound);

/// Best continued-fraction convergent of `value` with denominator <= bound.
Rational rational_reconstruct(const BigFloat& value, const Integer& bound);

}  // namespace polyred
