#include "polyred/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace polyred {

Matrix::Matrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field_))
{
}

Matrix Matrix::from_rows(FieldRef field, std::vector<std::vector<FieldElement>> rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw PreconditionError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            require_same_field(m.at(r, c), rows[r][c]);
            m.at(r, c) = std::move(rows[r][c]);
        }
    }
    return m;
}

namespace {

std::size_t bit_size(const FieldElement& x)
{
    std::size_t s = 0;
    for (const auto& q : x.coords())
        if (q != 0)
            s += mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
    return s;
}

}  // namespace

LinearSolution solve_linear(const Matrix& system, std::span<const FieldElement> rhs)
{
    const std::size_t m = system.rows();
    const std::size_t u = system.cols();
    if (rhs.size() != m)
        throw PreconditionError("right-hand side has " + std::to_string(rhs.size()) + " entries for " +
                                std::to_string(m) + " rows");
    const FieldRef& field = system.field();

    // Augmented working copy; column u holds the right-hand side.
    std::vector<std::vector<FieldElement>> a(m);
    for (std::size_t r = 0; r < m; ++r) {
        a[r].reserve(u + 1);
        for (std::size_t c = 0; c < u; ++c)
            a[r].push_back(system.at(r, c));
        if (!same_field(field, rhs[r].field()))
            throw FieldMismatch("right-hand side from another field");
        a[r].push_back(rhs[r]);
    }
    std::vector<std::size_t> perm(u);  // working column -> original variable
    std::iota(perm.begin(), perm.end(), 0);

    std::size_t rank = 0;
    while (rank < std::min(m, u)) {
        std::size_t best_r = m, best_c = u, best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = rank; r < m; ++r)
            for (std::size_t c = rank; c < u; ++c)
                if (!a[r][c].is_zero()) {
                    const std::size_t s = bit_size(a[r][c]);
                    if (s < best_size) {
                        best_size = s;
                        best_r = r;
                        best_c = c;
                    }
                }
        if (best_r == m)
            break;
        std::swap(a[rank], a[best_r]);
        if (best_c != rank) {
            for (auto& row : a)
                std::swap(row[rank], row[best_c]);
            std::swap(perm[rank], perm[best_c]);
        }
        const FieldElement inv = a[rank][rank].inverse();
        for (std::size_t c = rank; c <= u; ++c)
            a[rank][c] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][rank].is_zero())
                continue;
            const FieldElement f = a[r][rank];
            for (std::size_t c = rank; c <= u; ++c)
                if (!a[rank][c].is_zero())
                    a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }

    LinearSolution out;
    out.rank = rank;
    for (std::size_t r = rank; r < m; ++r)
        if (!a[r][u].is_zero()) {
            out.kind = LinearSolution::Kind::inconsistent;
            return out;
        }

    out.particular.assign(u, FieldElement::zero(field));
    for (std::size_t i = 0; i < rank; ++i)
        out.particular[perm[i]] = a[i][u];
    for (std::size_t f = rank; f < u; ++f) {
        std::vector<FieldElement> v(u, FieldElement::zero(field));
        v[perm[f]] = FieldElement::one(field);
        for (std::size_t i = 0; i < rank; ++i)
            v[perm[i]] = -a[i][f];
        out.nullspace.push_back(std::move(v));
    }
    out.kind = out.nullspace.empty() ? LinearSolution::Kind::unique : LinearSolution::Kind::underdetermined;
    return out;
}

std::optional<Polynomial> interpolate_labeled(std::span<const std::pair<FieldElement, FieldElement>> points,
                                              std::size_t degree_cap)
{
    if (points.empty())
        throw PreconditionError("interpolation needs at least one point");
    if (points.size() < degree_cap + 1)
        throw PreconditionError("interpolation at degree cap " + std::to_string(degree_cap) + " needs at least " +
                                std::to_string(degree_cap + 1) + " points");
    const FieldRef& field = points.front().first.field();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw PreconditionError("duplicate abscissa in interpolation data");

    Matrix v(field, points.size(), degree_cap + 1);
    std::vector<FieldElement> rhs;
    rhs.reserve(points.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        FieldElement power = FieldElement::one(field);
        for (std::size_t c = 0; c <= degree_cap; ++c) {
            v.at(r, c) = power;
            power *= points[r].first;
        }
        rhs.push_back(points[r].second);
    }
    LinearSolution sol = solve_linear(v, rhs);
    if (!sol.consistent())
        return std::nullopt;
    return Polynomial(field, std::move(sol.particular));
}

}  // namespace polyred
