#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyred/field.hpp"
#include "polyred/polynomial.hpp"

namespace polyred {

// Row-major dense matrix over the working field.
class Matrix {
public:
    Matrix(FieldRef field, std::size_t rows, std::size_t cols);
    /// Every row must have the same length.
    static Matrix from_rows(FieldRef field, std::vector<std::vector<FieldElement>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldRef& field() const noexcept { return field_; }

    FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    FieldRef field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

struct LinearSolution {
    enum class Kind { unique, inconsistent, underdetermined };

    Kind kind;
    std::size_t rank = 0;
    /// Free variables set to zero; empty when inconsistent.
    std::vector<FieldElement> particular;
    /// A basis of the kernel of the coefficient matrix.
    std::vector<std::vector<FieldElement>> nullspace;

    std::size_t nullspace_dim() const noexcept { return nullspace.size(); }
    bool consistent() const noexcept { return kind != Kind::inconsistent; }
};

/// Gauss-Jordan elimination with full pivoting. The pivot at each step is
/// the non-zero entry of smallest bit size in the remaining block, which
/// keeps coefficient growth down.
LinearSolution solve_linear(const Matrix& system, std::span<const FieldElement> rhs);

/// The unique polynomial of degree <= degree_cap through the points, or
/// nothing when the evaluation system is inconsistent. Requires distinct
/// abscissae and at least degree_cap + 1 points.
std::optional<Polynomial> interpolate_labeled(std::span<const std::pair<FieldElement, FieldElement>> points,
                                              std::size_t degree_cap);

}  // namespace polyred
