#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ew/scalar.hpp"

namespace ew {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over Q(sqrt2, sqrt3).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }

    /// Appends `column` on the right.
    ExactMatrix with_column(const Vec& column) const;
    /// Appends `row` at the bottom.
    ExactMatrix with_row(std::span<const Scalar> row) const;

    Vec apply(const Vec& x) const;
    ExactMatrix transposed() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form: pivots are 1 and are the only nonzero entry
/// in their column; rows past `rank` are zero.
struct EchelonForm {
    ExactMatrix matrix;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination; pivot is the first nonzero entry in column order.
EchelonForm echelon(ExactMatrix m);

/// Echelon form together with the invertible row transform T with T * A = R.
struct TrackedEchelon {
    EchelonForm form;
    ExactMatrix transform;
};

TrackedEchelon echelon_tracked(const ExactMatrix& m);

/// Echelon form of (A | b) obtained from a tracked echelon of A without
/// redoing the elimination: the new column is T * b, followed by at most one
/// extra pivot step.
EchelonForm augment(const TrackedEchelon& e, const Vec& b);

/// What remains of `row` after subtracting its components along the pivot
/// rows. Zero exactly when `row` lies in the row space.
Vec reduce_row(const EchelonForm& e, std::span<const Scalar> row);

/// Rank of the echelon's matrix with `row` appended. One reduction pass
/// against the pivots; `e` is not modified. Throws DimensionMismatch.
std::size_t rank_with_row(const EchelonForm& e, std::span<const Scalar> row);

/// For the echelon of an augmented system (A | b): the solution with all free
/// variables set to zero, or nullopt if the last column holds a pivot.
std::optional<Vec> sample_solution(const EchelonForm& augmented);

/// Basis of {x : A x = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const EchelonForm& e);

}  // namespace ew
