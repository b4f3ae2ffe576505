#include "polyred/polynomial.hpp"

#include <sstream>
#include <utility>

namespace polyred {

std::size_t Degree::value() const
{
    if (!value_)
        throw PreconditionError("degree of the zero polynomial is minus infinity");
    return *value_;
}

Polynomial::Polynomial(FieldRef field) : field_(std::move(field))
{
    if (!field_)
        throw PreconditionError("polynomial without a field");
}

Polynomial::Polynomial(FieldRef field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (!field_)
        throw PreconditionError("polynomial without a field");
    for (const auto& c : coeffs_)
        if (!same_field(c.field(), field_))
            throw FieldMismatch("polynomial coefficient from another field");
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c)
{
    return Polynomial(c.field(), {c});
}

Polynomial Polynomial::x(FieldRef field)
{
    return monomial(FieldElement::one(field), 1);
}

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t k)
{
    std::vector<FieldElement> coeffs(k + 1, FieldElement::zero(c.field()));
    coeffs[k] = c;
    return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::from_roots(FieldRef field, std::span<const FieldElement> roots,
                                  std::span<const std::size_t> multiplicities)
{
    if (roots.size() != multiplicities.size())
        throw PreconditionError("from_roots: one multiplicity per root is required");
    Polynomial acc = constant(FieldElement::one(field));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Polynomial factor(field, {-roots[i], FieldElement::one(field)});
        for (std::size_t e = 0; e < multiplicities[i]; ++e)
            acc = acc * factor;
    }
    return acc;
}

FieldElement Polynomial::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : FieldElement::zero(field_);
}

Degree Polynomial::degree() const noexcept
{
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
}

const FieldElement& Polynomial::leading() const
{
    if (coeffs_.empty())
        throw PreconditionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (!same_field(field_, rhs.field_))
        throw FieldMismatch("polynomials over different fields");
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (!same_field(field_, rhs.field_))
        throw FieldMismatch("polynomials over different fields");
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (!same_field(a.field_, b.field_))
        throw FieldMismatch("polynomials over different fields");
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.field_);
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const FieldElement& c, const Polynomial& p)
{
    std::vector<FieldElement> out;
    out.reserve(p.coeffs_.size());
    for (const auto& x : p.coeffs_)
        out.push_back(c * x);
    return Polynomial(p.field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (!same_field(a.field_, b.field_))
        throw FieldMismatch("polynomials over different fields");
    return a.coeffs_ == b.coeffs_;
}

std::string Polynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << coeffs_[k].to_string() << ")";
        if (k == 1)
            os << "X";
        else if (k > 1)
            os << "X^" << k;
    }
    return os.str();
}

FieldElement eval(const Polynomial& p, const FieldElement& x)
{
    require_same_field(FieldElement::zero(p.field()), x);
    FieldElement acc = FieldElement::zero(p.field());
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= x;
        acc += c[k];
    }
    return acc;
}

Polynomial derivative(const Polynomial& p, std::size_t order)
{
    const auto& c = p.coeffs();
    if (order >= c.size())
        return Polynomial(p.field());
    std::vector<FieldElement> out;
    out.reserve(c.size() - order);
    for (std::size_t k = order; k < c.size(); ++k) {
        // k (k-1) ... (k-order+1)
        Integer falling = 1;
        for (std::size_t i = 0; i < order; ++i)
            falling *= static_cast<unsigned long>(k - i);
        out.push_back(FieldElement::from_rational(p.field(), Rational(falling)) * c[k]);
    }
    return Polynomial(p.field(), std::move(out));
}

std::size_t root_multiplicity(const Polynomial& p, const FieldElement& a)
{
    if (p.is_zero())
        throw PreconditionError("root multiplicity of the zero polynomial is undefined");
    Polynomial d = p;
    std::size_t k = 0;
    while (eval(d, a).is_zero()) {
        ++k;
        d = derivative(d, 1);
    }
    return k;
}

Polynomial compose(const Polynomial& p, const Polynomial& q)
{
    if (!same_field(p.field(), q.field()))
        throw FieldMismatch("polynomials over different fields");
    Polynomial acc(p.field());
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * q + Polynomial::constant(c[k]);
    return acc;
}

LinearPoly::LinearPoly(FieldElement c, FieldElement c_prime) : c_(std::move(c)), c_prime_(std::move(c_prime))
{
    require_same_field(c_, c_prime_);
    if (c_.is_zero())
        throw PreconditionError("linear polynomial needs a non-zero leading coefficient");
}

LinearPoly LinearPoly::identity(FieldRef field)
{
    return LinearPoly(FieldElement::one(field), FieldElement::zero(field));
}

LinearPoly LinearPoly::through(const FieldElement& x0, const FieldElement& y0, const FieldElement& x1,
                               const FieldElement& y1)
{
    if (x0 == x1 || y0 == y1)
        throw PreconditionError("a linear map needs two distinct points and two distinct values");
    FieldElement c = (y0 - y1) / (x0 - x1);
    FieldElement c_prime = y0 - c * x0;
    return LinearPoly(std::move(c), std::move(c_prime));
}

LinearPoly LinearPoly::inverse() const
{
    FieldElement inv = c_.inverse();
    return LinearPoly(inv, -(inv * c_prime_));
}

LinearPoly LinearPoly::after(const LinearPoly& inner) const
{
    return LinearPoly(c_ * inner.c_, c_ * inner.c_prime_ + c_prime_);
}

Polynomial LinearPoly::to_polynomial() const
{
    return Polynomial(c_.field(), {c_prime_, c_});
}

bool LinearPoly::is_identity() const
{
    return c_.is_one() && c_prime_.is_zero();
}

std::strong_ordering linear_cmp(const LinearPoly& a, const LinearPoly& b)
{
    if (auto r = total_order_cmp(a.c(), b.c()); r != 0)
        return r;
    return total_order_cmp(a.c_prime(), b.c_prime());
}

}  // namespace polyred
