#include "polyred/reduction.hpp"

#include <algorithm>
#include <map>

#include "polyred/linalg.hpp"
#include "polyred/numeric.hpp"

namespace polyred {

DegreeWindow degree_bounds(std::size_t m, std::size_t n)
{
    if (n < 2 || n >= m)
        throw PreconditionError("degree window needs 2 <= n < m, got m = " + std::to_string(m) +
                                ", n = " + std::to_string(n));
    DegreeWindow w{m, n, {}};
    const std::size_t lo = (m + n - 1) / n;
    const std::size_t hi = (m - 1) / (n - 1);
    for (std::size_t g = lo; g <= hi; ++g)
        w.gammas.push_back(g);
    return w;
}

std::optional<Reduction> make_reduction(const Polynomial& p, const FiniteSubset& a, const FiniteSubset& b)
{
    if (p.is_constant())
        throw PreconditionError("exact preimage check needs a non-constant polynomial");
    require_same_field(a[0], b[0]);
    const std::size_t gamma = p.degree().value();

    std::vector<Fiber> fibers;
    fibers.reserve(b.size());
    for (const auto& y : b.elems())
        fibers.push_back(Fiber{y, {}});
    for (const auto& x : a.elems()) {
        const std::size_t k = b.index_of(eval(p, x));
        if (k == b.size())
            return std::nullopt;
        fibers[k].preimages.push_back(FiberEntry{x, 0});
    }
    for (auto& f : fibers) {
        if (f.preimages.empty())
            return std::nullopt;
        const Polynomial shifted = p - Polynomial::constant(f.target);
        std::size_t total = 0;
        for (auto& e : f.preimages) {
            e.multiplicity = root_multiplicity(shifted, e.a);
            total += e.multiplicity;
        }
        if (total != gamma)
            return std::nullopt;
    }
    return Reduction{p, a, b, gamma, std::move(fibers)};
}

bool check_exact_preimage(const Polynomial& p, const FiniteSubset& a, const FiniteSubset& b)
{
    return make_reduction(p, a, b).has_value();
}

namespace {

bool reduction_less(const Reduction& x, const Reduction& y)
{
    if (x.gamma != y.gamma)
        return x.gamma < y.gamma;
    return tuple_cmp(x.poly.coeffs(), y.poly.coeffs()) < 0;
}

}  // namespace

std::vector<Reduction> search_reductions(const FiniteSubset& a, const FiniteSubset& b, std::size_t gamma,
                                         bool first_only)
{
    require_same_field(a[0], b[0]);
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    if (gamma < 1)
        throw PreconditionError("reduction degree must be at least 1");
    if (n < 2 || n > m)
        throw PreconditionError("reduction search needs 2 <= |B| <= |A|");
    if (m < gamma + 1)
        throw PreconditionError("reduction search at degree " + std::to_string(gamma) + " needs at least " +
                                std::to_string(gamma + 1) + " source points");
    const FieldRef& field = a.field();
    const std::size_t k = gamma + 1;

    // Lagrange basis on the first k points of A, and its values on the rest.
    std::vector<Polynomial> basis;
    for (std::size_t i = 0; i < k; ++i) {
        Polynomial l = Polynomial::constant(FieldElement::one(field));
        FieldElement denom = FieldElement::one(field);
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) {
                l = l * Polynomial(field, {-a[j], FieldElement::one(field)});
                denom *= a[i] - a[j];
            }
        basis.push_back(denom.inverse() * l);
    }
    std::vector<std::vector<FieldElement>> tail(m - k);
    for (std::size_t t = k; t < m; ++t)
        for (std::size_t i = 0; i < k; ++i)
            tail[t - k].push_back(eval(basis[i], a[t]));

    // L_i'(a_t) for every source point, so P'(a_t) is a dot product.
    std::vector<Polynomial> dbasis;
    for (const auto& l : basis)
        dbasis.push_back(derivative(l, 1));
    std::vector<std::vector<FieldElement>> dvals(m);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < k; ++i)
            dvals[t].push_back(eval(dbasis[i], a[t]));
    auto critical = [&](const std::vector<std::size_t>& label, std::size_t t) {
        FieldElement v = FieldElement::zero(field);
        for (std::size_t i = 0; i < k; ++i)
            v += b[label[i]] * dvals[t][i];
        return v.is_zero();
    };

    std::vector<Reduction> out;
    std::vector<std::size_t> label(k, 0);
    std::vector<std::size_t> full(m);
    std::vector<std::size_t> count(n);
    for (;;) {
        std::fill(count.begin(), count.end(), 0);
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            full[i] = label[i];
            ok = ++count[label[i]] <= gamma;
        }
        for (std::size_t t = k; t < m && ok; ++t) {
            FieldElement v = FieldElement::zero(field);
            for (std::size_t i = 0; i < k; ++i)
                v += b[label[i]] * tail[t - k][i];
            const std::size_t idx = b.index_of(v);
            ok = idx != n && ++count[idx] <= gamma;
            if (ok)
                full[t] = idx;
        }
        ok = ok && std::none_of(count.begin(), count.end(), [](std::size_t c) { return c == 0; });
        // A fiber with fewer than gamma points needs a repeated root, hence a
        // critical point of P inside it.
        for (std::size_t y = 0; y < n && ok; ++y) {
            if (count[y] == gamma)
                continue;
            bool any = false;
            for (std::size_t t = 0; t < m && !any; ++t)
                any = full[t] == y && critical(label, t);
            ok = any;
        }
        if (ok) {
            Polynomial p(field);
            for (std::size_t i = 0; i < k; ++i)
                p += b[label[i]] * basis[i];
            if (!p.is_zero() && p.degree() == Degree(gamma)) {
                if (auto red = make_reduction(p, a, b)) {
                    std::vector<std::pair<FieldElement, FieldElement>> pts;
                    for (std::size_t t = 0; t < m; ++t)
                        pts.emplace_back(a[t], b[full[t]]);
                    auto q = interpolate_labeled(pts, gamma);
                    if (!q || !(*q == p))
                        throw Error("interpolation disagrees with the Lagrange candidate");
                    out.push_back(std::move(*red));
                    if (first_only)
                        return out;
                }
            }
        }
        std::size_t pos = 0;
        while (pos < k && ++label[pos] == n)
            label[pos++] = 0;
        if (pos == k)
            break;
    }
    std::sort(out.begin(), out.end(), reduction_less);
    return out;
}

std::vector<Reduction> find_reductions(const FiniteSubset& a, const FiniteSubset& b)
{
    if (b.size() < 2 || b.size() >= a.size())
        throw PreconditionError("find_reductions needs 2 <= |B| < |A|");
    std::vector<Reduction> out;
    for (std::size_t g : degree_bounds(a.size(), b.size()).gammas) {
        auto part = search_reductions(a, b, g);
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

std::optional<Reduction> reduction_witness(const FiniteSubset& a, const FiniteSubset& b)
{
    require_same_field(a[0], b[0]);
    if (a.size() < b.size())
        return std::nullopt;
    if (b.size() == 1) {
        std::vector<std::size_t> ones(a.size(), 1);
        const Polynomial p =
            Polynomial::from_roots(a.field(), a.elems(), ones) + Polynomial::constant(b[0]);
        return make_reduction(p, a, b);
    }
    if (a.size() == b.size()) {
        const auto maps = linear_maps_between(a, b).maps;
        if (maps.empty())
            return std::nullopt;
        return make_reduction(maps.front().to_polynomial(), a, b);
    }
    for (std::size_t g : degree_bounds(a.size(), b.size()).gammas) {
        auto hit = search_reductions(a, b, g, true);
        if (!hit.empty())
            return std::move(hit.front());
    }
    return std::nullopt;
}

bool reduces(const FiniteSubset& a, const FiniteSubset& b)
{
    return reduction_witness(a, b).has_value();
}

namespace {

// All compositions of total into parts positive parts.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out)
{
    if (parts == 0) {
        if (total == 0)
            out.push_back(cur);
        return;
    }
    for (std::size_t v = 1; v + parts - 1 <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Successor> successors(const FiniteSubset& a, std::optional<std::size_t> max_degree)
{
    const std::size_t m = a.size();
    if (m < 2)
        throw PreconditionError("successors need at least 2 elements");
    const FieldRef& field = a.field();
    const std::size_t top = std::min(max_degree.value_or(m - 1), m - 1);

    // pw[k][i][e] = (a_k - a_i)^e, so P(a_k) is a product of table entries.
    std::vector<std::vector<std::vector<FieldElement>>> pw(m, std::vector<std::vector<FieldElement>>(m));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            const FieldElement d = a[k] - a[i];
            pw[k][i].push_back(FieldElement::one(field));
            for (std::size_t e = 1; e <= top; ++e)
                pw[k][i].push_back(pw[k][i].back() * d);
        }

    std::map<std::string, Successor> found;
    for (std::size_t gamma = 2; gamma <= top; ++gamma) {
        for (std::size_t p = 1; p <= std::min(gamma, m - 1); ++p) {
            std::vector<std::vector<std::size_t>> mults;
            std::vector<std::size_t> cur;
            compositions(gamma, p, cur, mults);

            // Subsets I of size p in lexicographic order.
            std::vector<std::size_t> idx(p);
            for (std::size_t i = 0; i < p; ++i)
                idx[i] = i;
            for (;;) {
                std::vector<bool> in_i(m, false);
                std::vector<FieldElement> roots;
                for (std::size_t i : idx) {
                    in_i[i] = true;
                    roots.push_back(a[i]);
                }
                for (const auto& r : mults) {
                    // Unnormalized values prod (a_k - a_i)^r_i; zero on I.
                    std::vector<FieldElement> raw(m, FieldElement::zero(field));
                    for (std::size_t k = 0; k < m; ++k) {
                        if (in_i[k])
                            continue;
                        raw[k] = FieldElement::one(field);
                        for (std::size_t h = 0; h < p; ++h)
                            raw[k] *= pw[k][idx[h]][r[h]];
                    }
                    for (std::size_t j = 0; j < m; ++j) {
                        if (in_i[j])
                            continue;
                        const FieldElement scale = raw[j].inverse();
                        std::vector<FieldElement> values;
                        for (std::size_t k = 0; k < m; ++k)
                            values.push_back(raw[k] * scale);
                        const FiniteSubset image = FiniteSubset::from_values(std::move(values));
                        const std::size_t n = image.size();
                        // P' has only p - 1 roots off I, which caps the
                        // multiplicity excess over the non-zero fibers.
                        if (n < 2 || n >= m || (n - 1) * gamma > m - 1 || n * gamma < m)
                            continue;
                        ClassInvariant inv = canonical_invariant(image);
                        std::string key = inv.key();
                        if (found.contains(key))
                            continue;
                        const Polynomial poly = scale * Polynomial::from_roots(field, roots, r);
                        auto red = make_reduction(poly, a, image);
                        if (red)
                            found.emplace(std::move(key), Successor{std::move(inv), image, std::move(red)});
                    }
                }
                std::size_t i = p;
                while (i > 0 && idx[i - 1] == m - p + i - 1)
                    --i;
                if (i == 0)
                    break;
                ++idx[i - 1];
                for (std::size_t t = i; t < p; ++t)
                    idx[t] = idx[t - 1] + 1;
            }
        }
    }

    ClassInvariant self = canonical_invariant(a);
    found.emplace(self.key(), Successor{self, a, std::nullopt});
    const FiniteSubset point(std::vector<FieldElement>{FieldElement::zero(field)});
    ClassInvariant one = canonical_invariant(point);
    found.emplace(one.key(), Successor{one, point, std::nullopt});

    std::vector<Successor> out;
    for (auto& [key, s] : found)
        out.push_back(std::move(s));
    std::stable_sort(out.begin(), out.end(),
                     [](const Successor& x, const Successor& y) { return x.invariant.n < y.invariant.n; });
    return out;
}

std::pair<FiniteSubset, LinearPoly> normalize_to_contain_0_1(const FiniteSubset& a)
{
    if (a.size() < 2)
        throw PreconditionError("normalization needs at least 2 elements");
    const FieldRef& field = a.field();
    LinearPoly l = LinearPoly::through(a[0], FieldElement::zero(field), a[1], FieldElement::one(field));
    return {a.image(l), l};
}

Predecessor predecessor_2n_minus_1(const FiniteSubset& b, const Integer& denominator_bound)
{
    if (b.size() < 2)
        throw PreconditionError("predecessor needs at least 2 elements");
    const FieldRef& field = b.field();
    const FieldElement zero = FieldElement::zero(field);
    const FieldElement one = FieldElement::one(field);

    // The smallest pair first; other normalizations give the same class and
    // are only tried when a root is missing.
    std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}};
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (i != j && !(i == 0 && j == 1))
                pairs.emplace_back(i, j);

    for (const auto& [i, j] : pairs) {
        const LinearPoly l = LinearPoly::through(b[i], zero, b[j], one);
        const FiniteSubset target = b.image(l);
        std::vector<FieldElement> source{zero};
        bool complete = true;
        for (const auto& y : target.elems()) {
            if (y.is_zero())
                continue;
            auto root = y.is_one() ? std::optional<FieldElement>(one) : sqrt_in_field(y, denominator_bound);
            if (!root) {
                complete = false;
                break;
            }
            source.push_back(*root);
            source.push_back(-*root);
        }
        if (!complete)
            continue;
        FiniteSubset a(std::move(source));
        const Polynomial square = Polynomial::monomial(one, 2);
        if (!check_exact_preimage(square, a, target))
            throw Error("X^2 does not reduce the constructed predecessor");
        return Predecessor{std::move(a), target, l};
    }
    throw NotFound("square root not found in working field within denominator bound " +
                   denominator_bound.get_str());
}

}  // namespace polyred
