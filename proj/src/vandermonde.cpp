#include "polyred/vandermonde.hpp"

#include <algorithm>

namespace polyred {

EnrichedVandermonde build_enriched(std::size_t gamma_plus_1, std::span<const std::size_t> s_vec,
                                   std::span<const FieldElement> a_vec)
{
    if (s_vec.size() != a_vec.size())
        throw PreconditionError("s and a vectors differ in length");
    if (a_vec.empty())
        throw PreconditionError("at least one abscissa is required");
    for (std::size_t i = 0; i < a_vec.size(); ++i)
        for (std::size_t j = i + 1; j < a_vec.size(); ++j)
            if (a_vec[i] == a_vec[j])
                throw PreconditionError("duplicate abscissa " + a_vec[i].to_string());
    std::size_t rows = 0;
    for (std::size_t s : s_vec)
        rows += s + 1;
    if (rows > gamma_plus_1)
        throw PreconditionError(std::to_string(rows) + " rows exceed " + std::to_string(gamma_plus_1) + " columns");

    const FieldRef& field = a_vec.front().field();
    Matrix m(field, rows, gamma_plus_1);
    std::size_t r = 0;
    for (std::size_t l = 0; l < a_vec.size(); ++l) {
        std::vector<FieldElement> powers{FieldElement::one(field)};
        for (std::size_t j = 1; j < gamma_plus_1; ++j)
            powers.push_back(powers.back() * a_vec[l]);
        for (std::size_t s = 0; s <= s_vec[l]; ++s, ++r)
            for (std::size_t j = s; j < gamma_plus_1; ++j) {
                Integer falling = 1;
                for (std::size_t i = 0; i < s; ++i)
                    falling *= static_cast<unsigned long>(j - i);
                m.at(r, j) = FieldElement::from_rational(field, Rational(falling)) * powers[j - s];
            }
    }
    return EnrichedVandermonde{gamma_plus_1, {s_vec.begin(), s_vec.end()}, {a_vec.begin(), a_vec.end()}, rows,
                               std::move(m)};
}

std::size_t exact_rank(const Matrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<FieldElement>> a(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r].push_back(m.at(r, c));

    FieldElement prev = FieldElement::one(m.field());
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t c = k; c < cols && pr == rows; ++c)
            for (std::size_t r = k; r < rows; ++r)
                if (!a[r][c].is_zero()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == rows)
            break;
        std::swap(a[k], a[pr]);
        if (pc != k)
            for (auto& row : a)
                std::swap(row[k], row[pc]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = FieldElement::zero(m.field());
        }
        prev = a[k][k];
    }
    return k;
}

}  // namespace polyred
