#include "polyred/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace polyred {

BigFloat::BigFloat(mpfr_prec_t precision)
{
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t precision, double value)
{
    mpfr_init2(value_, precision);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t precision, const Rational& value)
{
    mpfr_init2(value_, precision);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    // mpfr_swap needs an initialised target.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b)
{
    return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(joint(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(joint(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(joint(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(joint(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a)
{
    BigFloat r(a.precision());
    mpfr_neg(r.get(), a.get(), MPFR_RNDN);
    return r;
}

namespace {

struct Cx {
    BigFloat re, im;
};

Cx cx_mul(const Cx& a, const Cx& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cx cx_sub(const Cx& a, const Cx& b)
{
    return {a.re - b.re, a.im - b.im};
}

Cx cx_div(const Cx& a, const Cx& b)
{
    const BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigFloat cx_norm(const Cx& a)
{
    return a.re * a.re + a.im * a.im;
}

// Principal square root.
Cx cx_sqrt(const Cx& z)
{
    const mpfr_prec_t p = z.re.precision();
    BigFloat modulus = cx_norm(z);
    mpfr_sqrt(modulus.get(), modulus.get(), MPFR_RNDN);
    BigFloat two(p, 2.0);
    BigFloat re = (modulus + z.re) / two;
    BigFloat im = (modulus - z.re) / two;
    // Rounding can push a tiny value below zero.
    if (mpfr_sgn(re.get()) < 0)
        mpfr_set_zero(re.get(), 1);
    if (mpfr_sgn(im.get()) < 0)
        mpfr_set_zero(im.get(), 1);
    mpfr_sqrt(re.get(), re.get(), MPFR_RNDN);
    mpfr_sqrt(im.get(), im.get(), MPFR_RNDN);
    if (mpfr_sgn(z.im.get()) < 0)
        im = -im;
    return {re, im};
}

// exp(2*pi*i*num/den)
Cx unit_root(long num, long den, mpfr_prec_t p)
{
    BigFloat angle(p);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), 2 * num, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), den, MPFR_RNDN);
    BigFloat s(p), c(p);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return {c, s};
}

Cx embed(const FieldElement& x, long k, mpfr_prec_t p)
{
    const long n = static_cast<long>(x.field()->order());
    const auto coords = x.coords();
    Cx acc{BigFloat(p), BigFloat(p)};
    if (coords.size() == 1) {
        // Q itself (N = 1 or 2): zeta is rational and coords[0] is the value.
        acc.re = BigFloat(p, coords[0]);
        return acc;
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0)
            continue;
        const long e = (k * static_cast<long>(i)) % n;
        Cx w = unit_root(e, n, p);
        BigFloat q(p, coords[i]);
        acc.re = acc.re + q * w.re;
        acc.im = acc.im + q * w.im;
    }
    return acc;
}

std::size_t bitlen(const Integer& z)
{
    return z == 0 ? 1 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

// Solves the dense complex system in place by Gaussian elimination with
// partial pivoting. Returns false on a numerically singular matrix.
bool solve_complex(std::vector<std::vector<Cx>> a, std::vector<Cx> b, std::vector<Cx>& out)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        BigFloat best_norm = cx_norm(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            BigFloat nr = cx_norm(a[r][col]);
            if (mpfr_cmp(nr.get(), best_norm.get()) > 0) {
                best = r;
                best_norm = nr;
            }
        }
        if (mpfr_zero_p(best_norm.get()))
            return false;
        std::swap(a[col], a[best]);
        std::swap(b[col], b[best]);
        for (std::size_t r = col + 1; r < n; ++r) {
            Cx f = cx_div(a[r][col], a[col][col]);
            for (std::size_t c = col; c < n; ++c)
                a[r][c] = cx_sub(a[r][c], cx_mul(f, a[col][c]));
            b[r] = cx_sub(b[r], cx_mul(f, b[col]));
        }
    }
    out.assign(n, Cx{BigFloat(b[0].re.precision()), BigFloat(b[0].re.precision())});
    for (std::size_t i = n; i-- > 0;) {
        Cx acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            acc = cx_sub(acc, cx_mul(a[i][c], out[c]));
        out[i] = cx_div(acc, a[i][i]);
    }
    return true;
}

}  // namespace

ComplexApprox numeric_embed_conjugate(const FieldElement& x, long k, long precision_bits)
{
    if (precision_bits < 53)
        throw PreconditionError("numeric_embed needs at least 53 bits of precision");
    const mpfr_prec_t work = precision_bits + 32 + static_cast<mpfr_prec_t>(bitlen(x.coords().size()));
    Cx v = embed(x, k, work);
    ComplexApprox out{BigFloat(precision_bits), BigFloat(precision_bits)};
    mpfr_set(out.re.get(), v.re.get(), MPFR_RNDN);
    mpfr_set(out.im.get(), v.im.get(), MPFR_RNDN);
    return out;
}

ComplexApprox numeric_embed(const FieldElement& x, long precision_bits)
{
    return numeric_embed_conjugate(x, 1, precision_bits);
}

Rational rational_reconstruct(const BigFloat& value, const Integer& bound)
{
    const mpfr_prec_t p = value.precision();
    BigFloat x = value;
    Integer a;
    mpfr_get_z(a.get_mpz_t(), x.get(), MPFR_RNDD);
    Integer p_prev = 1, q_prev = 0;
    Integer p_cur = a, q_cur = 1;
    BigFloat frac(p);
    BigFloat af(p);
    mpfr_set_z(af.get(), a.get_mpz_t(), MPFR_RNDN);
    frac = x - af;
    for (mpfr_prec_t iter = 0; iter < p; ++iter) {
        if (mpfr_zero_p(frac.get()) || mpfr_get_exp(frac.get()) < -(p - 16))
            break;
        BigFloat one(p, 1.0);
        x = one / frac;
        mpfr_get_z(a.get_mpz_t(), x.get(), MPFR_RNDD);
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        if (q_next > bound)
            break;
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
        mpfr_set_z(af.get(), a.get_mpz_t(), MPFR_RNDN);
        frac = x - af;
    }
    Rational r(p_cur, q_cur);
    r.canonicalize();
    return r;
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& x, const Integer& denominator_bound)
{
    if (denominator_bound < 1)
        throw PreconditionError("denominator bound must be at least 1");
    const FieldRef& field = x.field();
    if (x.is_zero())
        return x;

    const long n = static_cast<long>(field->order());
    const std::size_t d = field->degree();

    std::size_t height = 0;
    for (const auto& q : x.coords())
        height = std::max(height, bitlen(q.get_num()) + bitlen(q.get_den()));
    const mpfr_prec_t p = static_cast<mpfr_prec_t>(160 + 4 * bitlen(denominator_bound) + 2 * height + 8 * d);

    // Unit residues k index the embeddings zeta -> exp(2*pi*i*k/N).
    std::vector<long> units;
    for (long k = 0; k < std::max(n, 1L); ++k)
        if (std::gcd(k, n) == 1)
            units.push_back(k);
    if (units.size() != d)
        throw Error("embedding count does not match field degree");

    std::vector<Cx> roots;
    roots.reserve(d);
    for (long k : units)
        roots.push_back(cx_sqrt(embed(x, k, p)));

    // Coordinates are rational, so conjugate embeddings carry conjugate values;
    // only one sign per conjugate pair is free, and the overall sign is fixed.
    std::vector<std::size_t> reps;
    std::vector<std::size_t> partner(d);
    for (std::size_t i = 0; i < d; ++i) {
        const long conj = (n - units[i]) % n;
        const auto it = std::find(units.begin(), units.end(), conj);
        partner[i] = static_cast<std::size_t>(it - units.begin());
        if (partner[i] >= i)
            reps.push_back(i);
    }

    std::vector<std::vector<Cx>> matrix(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            matrix[r].push_back(unit_root((units[r] * static_cast<long>(c)) % n, n, p));

    std::optional<FieldElement> found;
    const std::size_t free_signs = reps.empty() ? 0 : reps.size() - 1;
    if (free_signs > 20)
        throw PreconditionError("field degree too large for the square-root search");
    for (unsigned long mask = 0; mask < (1UL << free_signs); ++mask) {
        std::vector<Cx> rhs(d, Cx{BigFloat(p), BigFloat(p)});
        for (std::size_t j = 0; j < reps.size(); ++j) {
            const std::size_t i = reps[j];
            Cx v = roots[i];
            if (j > 0 && ((mask >> (j - 1)) & 1UL)) {
                v.re = -v.re;
                v.im = -v.im;
            }
            rhs[i] = v;
            if (partner[i] != i)
                rhs[partner[i]] = Cx{v.re, -v.im};
        }
        std::vector<Cx> sol;
        if (!solve_complex(matrix, rhs, sol))
            continue;
        std::vector<Rational> coords(d);
        for (std::size_t i = 0; i < d; ++i)
            coords[i] = rational_reconstruct(sol[i].re, denominator_bound);
        FieldElement y(field, std::move(coords));
        if (y * y == x) {
            found = y;
            break;
        }
    }
    if (!found)
        return std::nullopt;
    // Report the larger of +y, -y in the total order.
    FieldElement neg = -*found;
    if (total_order_cmp(neg, *found) > 0)
        return neg;
    return found;
}

}  // namespace polyred
