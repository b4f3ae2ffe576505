#include "polyred/classes.hpp"

#include <algorithm>

#include "polyred/encoding.hpp"

namespace polyred {

FiniteSubset::FiniteSubset(std::vector<FieldElement> elems) : elems_(std::move(elems))
{
    if (elems_.empty())
        throw PreconditionError("finite subsets must be non-empty");
    for (const auto& x : elems_)
        require_same_field(elems_.front(), x);
    std::sort(elems_.begin(), elems_.end(), TotalOrderLess{});
    for (std::size_t i = 1; i < elems_.size(); ++i)
        if (elems_[i - 1] == elems_[i])
            throw PreconditionError("duplicate element " + elems_[i].to_string() + " in set");
}

FiniteSubset FiniteSubset::from_values(std::vector<FieldElement> values)
{
    std::sort(values.begin(), values.end(), TotalOrderLess{});
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return FiniteSubset(std::move(values));
}

std::size_t FiniteSubset::index_of(const FieldElement& x) const
{
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x, TotalOrderLess{});
    if (it != elems_.end() && *it == x)
        return static_cast<std::size_t>(it - elems_.begin());
    return elems_.size();
}

bool FiniteSubset::contains(const FieldElement& x) const
{
    return index_of(x) != elems_.size();
}

FiniteSubset FiniteSubset::image(const LinearPoly& p) const
{
    std::vector<FieldElement> out;
    out.reserve(elems_.size());
    for (const auto& x : elems_)
        out.push_back(p(x));
    return FiniteSubset(std::move(out));
}

FiniteSubset FiniteSubset::image(const Polynomial& p) const
{
    std::vector<FieldElement> out;
    out.reserve(elems_.size());
    for (const auto& x : elems_)
        out.push_back(eval(p, x));
    return from_values(std::move(out));
}

bool operator==(const FiniteSubset& a, const FiniteSubset& b)
{
    return a.elems_ == b.elems_;
}

std::string ClassInvariant::key() const
{
    return encode_invariant(*this).dump();
}

bool operator==(const ClassInvariant& a, const ClassInvariant& b)
{
    return a.n == b.n && a.lambdas == b.lambdas;
}

std::uint64_t factorial(std::size_t n)
{
    if (n > 20)
        throw PreconditionError("factorial overflows 64 bits beyond n = 20");
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

LinearMaps linear_maps_between(const FiniteSubset& a, const FiniteSubset& b)
{
    if (a.size() != b.size())
        throw PreconditionError("linear maps need sets of equal cardinality");
    require_same_field(a[0], b[0]);
    LinearMaps out;
    if (a.size() == 1) {
        out.maps.emplace_back(FieldElement::one(a.field()), b[0] - a[0]);
        out.one_parameter_family = true;
        return out;
    }
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            LinearPoly p = LinearPoly::through(a[0], b[i], a[1], b[j]);
            // p is injective, so P(A) inside B already means P(A) = B.
            const bool maps_onto = std::all_of(a.elems().begin(), a.elems().end(),
                                               [&](const FieldElement& x) { return b.contains(p(x)); });
            if (maps_onto)
                out.maps.push_back(std::move(p));
        }
    std::sort(out.maps.begin(), out.maps.end(),
              [](const LinearPoly& x, const LinearPoly& y) { return linear_cmp(x, y) < 0; });
    return out;
}

bool equivalent(const FiniteSubset& a, const FiniteSubset& b)
{
    if (a.size() != b.size())
        return false;
    require_same_field(a[0], b[0]);
    if (a.size() <= 2)
        return true;
    return !linear_maps_between(a, b).maps.empty();
}

namespace {

std::vector<FieldElement> lambda_tail(const FiniteSubset& b, std::size_t i1, std::size_t i2)
{
    const FieldElement scale = (b[i1] - b[i2]).inverse();
    std::vector<FieldElement> out;
    out.reserve(b.size() - 2);
    for (std::size_t j = 0; j < b.size(); ++j)
        if (j != i1 && j != i2)
            out.push_back((b[i1] - b[j]) * scale);
    return out;
}

}  // namespace

std::vector<FieldElement> lambda_tuple(const FiniteSubset& b, std::size_t i1, std::size_t i2)
{
    if (b.size() < 3)
        throw PreconditionError("lambda tuples need at least 3 elements");
    if (i1 >= b.size() || i2 >= b.size() || i1 == i2)
        throw PreconditionError("lambda tuple needs two distinct valid indices");
    auto out = lambda_tail(b, i1, i2);
    std::sort(out.begin(), out.end(), TotalOrderLess{});
    return out;
}

ClassInvariant canonical_invariant(const FiniteSubset& b)
{
    ClassInvariant inv;
    inv.n = b.size();
    if (b.size() <= 2)
        return inv;
    bool first = true;
    for (std::size_t i1 = 0; i1 < b.size(); ++i1)
        for (std::size_t i2 = 0; i2 < b.size(); ++i2) {
            if (i1 == i2)
                continue;
            auto candidate = lambda_tuple(b, i1, i2);
            if (first || tuple_cmp(candidate, inv.lambdas) < 0) {
                inv.lambdas = std::move(candidate);
                first = false;
            }
        }
    return inv;
}

Stabilizer stabilizer(const FiniteSubset& b)
{
    Stabilizer s;
    s.maps = linear_maps_between(b, b).maps;
    s.order = s.maps.size();
    for (const auto& p : s.maps)
        s.y_values.push_back(p.c());
    return s;
}

std::uint64_t chi(const FiniteSubset& b)
{
    if (b.size() < 3)
        throw PreconditionError("characteristic numbers are defined for n >= 3");
    return factorial(b.size()) / stabilizer(b).order;
}

std::vector<std::vector<FieldElement>> characteristic_lambda_points(const FiniteSubset& b)
{
    if (b.size() < 3)
        throw PreconditionError("characteristic lambda points need at least 3 elements");
    if (b.size() > 9)
        throw PreconditionError("characteristic lambda points are enumerated only up to n = 9");
    auto less = [](const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) {
        return tuple_cmp(x, y) < 0;
    };

    // Tuples from different anchor pairs either share their sorted form
    // (then they share every ordering) or have disjoint orderings.
    std::vector<std::vector<FieldElement>> tails;
    for (std::size_t i1 = 0; i1 < b.size(); ++i1)
        for (std::size_t i2 = 0; i2 < b.size(); ++i2)
            if (i1 != i2)
                tails.push_back(lambda_tuple(b, i1, i2));
    std::sort(tails.begin(), tails.end(), less);
    tails.erase(std::unique(tails.begin(), tails.end()), tails.end());

    std::vector<std::vector<FieldElement>> points;
    for (auto& tail : tails) {
        do {
            points.push_back(tail);
        } while (std::next_permutation(tail.begin(), tail.end(), TotalOrderLess{}));
    }
    std::sort(points.begin(), points.end(), less);
    return points;
}

ProjectivePair sigma3_coordinate(const FiniteSubset& b)
{
    if (b.size() != 3)
        throw PreconditionError("the Sigma_3 coordinate is defined for 3-element sets");
    const FieldRef& f = b.field();
    const FieldElement mean = (b[0] + b[1] + b[2]) * FieldElement::from_rational(f, Rational(1, 3));
    FieldElement w2 = FieldElement::zero(f);
    FieldElement w3 = FieldElement::zero(f);
    for (const auto& x : b.elems()) {
        const FieldElement d = x - mean;
        const FieldElement d2 = d * d;
        w2 += d2;
        w3 += d2 * d;
    }
    FieldElement u = w2 * w2 * w2;
    FieldElement v = w3 * w3;
    if (!u.is_zero())
        return {FieldElement::one(f), v / u};
    return {FieldElement::zero(f), FieldElement::one(f)};
}

}  // namespace polyred
