#include "polyred/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace polyred {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void trim(std::vector<Integer>& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact quotient of integer polynomials by a monic divisor.
std::vector<Integer> divide_exact_monic(std::vector<Integer> num, const std::vector<Integer>& den)
{
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer q = num[i];
        quot[i - dn] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= q * den[j];
    }
    trim(num);
    if (!num.empty())
        throw Error("cyclotomic recursion produced a non-zero remainder");
    return quot;
}

// Division with remainder in Q[X]; divisor must be non-zero.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den)
{
    if (num.size() < den.size())
        return {QPoly{}, std::move(num)};
    const std::size_t dn = den.size() - 1;
    QPoly quot(num.size() - dn, 0);
    const Rational lead_inv = 1 / den.back();
    for (std::size_t i = num.size(); i-- > dn;) {
        if (num[i] == 0)
            continue;
        const Rational q = num[i] * lead_inv;
        quot[i - dn] = q;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= q * den[j];
    }
    trim(num);
    trim(quot);
    return {std::move(quot), std::move(num)};
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

QPoly sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw ParseError("rational '" + std::string(text) + "' is not of the form p/q");
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    const std::string_view num_digits = (!num.empty() && num.front() == '-') ? num.substr(1) : num;
    if (!digits(num_digits) || !digits(den))
        throw ParseError("rational '" + std::string(text) + "' is not of the form p/q");
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(std::string(num), 10), d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::size_t euler_phi(std::size_t n)
{
    std::size_t result = n;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(std::size_t order)
{
    if (order == 0)
        throw PreconditionError("cyclotomic order must be positive");
    static std::mutex cache_mutex;
    static std::map<std::size_t, std::vector<Integer>> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(order); it != cache.end())
            return it->second;
    }
    // X^N - 1 divided by Phi_d for every proper divisor d.
    std::vector<Integer> poly(order + 1, 0);
    poly[0] = -1;
    poly[order] = 1;
    for (std::size_t d = 1; d < order; ++d)
        if (order % d == 0)
            poly = divide_exact_monic(std::move(poly), cyclotomic_polynomial(d));
    std::lock_guard lock(cache_mutex);
    cache.emplace(order, poly);
    return poly;
}

CyclotomicField::CyclotomicField(std::size_t order)
    : order_(order), modulus_(cyclotomic_polynomial(order))
{
    const std::size_t d = degree();
    if (d != euler_phi(order))
        throw Error("cyclotomic polynomial has unexpected degree");
    // Reduction rows for X^d .. X^(2d-2): X^d = -(c_0 + ... + c_{d-1} X^{d-1}).
    if (d >= 2) {
        std::vector<Integer> row(d);
        for (std::size_t i = 0; i < d; ++i)
            row[i] = -modulus_[i];
        reduction_.push_back(row);
        for (std::size_t k = d + 1; k <= 2 * d - 2; ++k) {
            std::vector<Integer> next(d, 0);
            const Integer top = row[d - 1];
            for (std::size_t i = d - 1; i > 0; --i)
                next[i] = row[i - 1];
            for (std::size_t i = 0; i < d; ++i)
                next[i] -= top * modulus_[i];
            row = std::move(next);
            reduction_.push_back(row);
        }
    }
}

const std::vector<Integer>& CyclotomicField::reduction_row(std::size_t k) const
{
    return reduction_.at(k - degree());
}

FieldRef make_field(std::size_t order)
{
    if (order == 0)
        throw PreconditionError("cyclotomic order must be positive");
    return std::make_shared<const CyclotomicField>(order);
}

bool same_field(const FieldRef& a, const FieldRef& b) noexcept
{
    return a == b || (a && b && a->order() == b->order());
}

void require_same_field(const FieldElement& a, const FieldElement& b)
{
    if (!same_field(a.field(), b.field()))
        throw FieldMismatch("operands belong to Q(zeta_" + std::to_string(a.field()->order()) + ") and Q(zeta_" +
                            std::to_string(b.field()->order()) + ")");
}

FieldElement::FieldElement(FieldRef field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords))
{
    if (!field_)
        throw PreconditionError("field element without a field");
    if (coords_.size() != field_->degree())
        throw PreconditionError("expected " + std::to_string(field_->degree()) + " coordinates, got " +
                                std::to_string(coords_.size()));
    for (auto& q : coords_)
        q.canonicalize();
}

FieldElement FieldElement::zero(FieldRef field)
{
    const std::size_t d = field->degree();
    return FieldElement(std::move(field), std::vector<Rational>(d, 0));
}

FieldElement FieldElement::one(FieldRef field)
{
    return from_rational(std::move(field), 1);
}

FieldElement FieldElement::from_rational(FieldRef field, const Rational& q)
{
    std::vector<Rational> c(field->degree(), 0);
    c[0] = q;
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::from_integer(FieldRef field, long value)
{
    return from_rational(std::move(field), Rational(value));
}

FieldElement FieldElement::zeta_power(FieldRef field, long k)
{
    const long n = static_cast<long>(field->order());
    long e = k % n;
    if (e < 0)
        e += n;
    const std::size_t d = field->degree();
    if (static_cast<std::size_t>(e) < d) {
        std::vector<Rational> c(d, 0);
        c[static_cast<std::size_t>(e)] = 1;
        return FieldElement(std::move(field), std::move(c));
    }
    // zeta^e = zeta^(d-1) * zeta^(e-d+1), reduced through multiplication.
    std::vector<Rational> base(d, 0);
    if (d >= 2)
        base[1] = 1;
    else
        base[0] = Rational(field->modulus()[0] * -1);  // Phi is X - z0, zeta = -c0
    FieldElement z(field, std::move(base));
    FieldElement out = one(field);
    for (long i = 0; i < e; ++i)
        out *= z;
    return out;
}

bool FieldElement::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_one() const noexcept
{
    if (coords_[0] != 1)
        return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const noexcept
{
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs)
{
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += rhs.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs)
{
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= rhs.coords_[i];
    return *this;
}

FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs)
{
    require_same_field(lhs, rhs);
    const CyclotomicField& f = *lhs.field_;
    const std::size_t d = f.degree();
    if (d == 1)
        return FieldElement(lhs.field_, {lhs.coords_[0] * rhs.coords_[0]});

    std::vector<Rational> full(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (lhs.coords_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            if (rhs.coords_[j] != 0)
                full[i + j] += lhs.coords_[i] * rhs.coords_[j];
    }
    std::vector<Rational> out(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(d));
    for (std::size_t k = d; k < full.size(); ++k) {
        if (full[k] == 0)
            continue;
        const auto& row = f.reduction_row(k);
        for (std::size_t i = 0; i < d; ++i)
            if (row[i] != 0)
                out[i] += full[k] * row[i];
    }
    return FieldElement(lhs.field_, std::move(out));
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs)
{
    *this = *this * rhs;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs)
{
    *this = *this * rhs.inverse();
    return *this;
}

FieldElement operator-(const FieldElement& x)
{
    std::vector<Rational> c(x.coords_.begin(), x.coords_.end());
    for (auto& q : c)
        q = -q;
    return FieldElement(x.field_, std::move(c));
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs)
{
    require_same_field(lhs, rhs);
    return lhs.coords_ == rhs.coords_;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    const std::size_t d = coords_.size();
    if (d == 1)
        return FieldElement(field_, {1 / coords_[0]});

    // Extended Euclid: track s with s*a == r (mod Phi).
    QPoly modulus(field_->modulus().begin(), field_->modulus().end());
    QPoly a(coords_.begin(), coords_.end());
    trim(a);
    QPoly r0 = modulus, r1 = a;
    QPoly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_N irreducible and a != 0 mod Phi_N: the last remainder is a non-zero constant.
    if (r1.empty())
        throw Error("element shares a factor with the cyclotomic modulus");
    const Rational g = r1[0];
    auto [q, s] = divmod(s1, modulus);
    (void)q;
    std::vector<Rational> out(d, 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = s[i] / g;
    return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::pow(long exponent) const
{
    FieldElement base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    FieldElement acc = one(field_);
    while (e > 0) {
        if (e & 1UL)
            acc *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return acc;
}

std::string FieldElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << coords_[i].get_str();
        if (i == 1)
            os << "*z";
        else if (i > 1)
            os << "*z^" << i;
    }
    if (first)
        os << "0";
    return os.str();
}

std::strong_ordering total_order_cmp(const FieldElement& x, const FieldElement& y)
{
    require_same_field(x, y);
    const auto xc = x.coords();
    const auto yc = y.coords();
    for (std::size_t i = 0; i < xc.size(); ++i) {
        const int c = cmp(xc[i], yc[i]);
        if (c < 0)
            return std::strong_ordering::less;
        if (c > 0)
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering tuple_cmp(std::span<const FieldElement> x, std::span<const FieldElement> y)
{
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = total_order_cmp(x[i], y[i]); c != 0)
            return c;
    return x.size() <=> y.size();
}

}  // namespace polyred
