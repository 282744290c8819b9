#include "ew/linalg.hpp"

#include <string>
#include <utility>

namespace ew {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols) throw DimensionMismatch("entry count does not match matrix shape");
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows)
{
    if (rows.empty()) return {};
    ExactMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::with_column(const Vec& column) const
{
    if (column.size() != rows_) throw DimensionMismatch("column length " + std::to_string(column.size()) + " != rows " + std::to_string(rows_));
    ExactMatrix m(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        m(r, cols_) = column[r];
    }
    return m;
}

ExactMatrix ExactMatrix::with_row(std::span<const Scalar> row) const
{
    if (row.size() != cols_) throw DimensionMismatch("row length " + std::to_string(row.size()) + " != cols " + std::to_string(cols_));
    ExactMatrix m = *this;
    m.data_.insert(m.data_.end(), row.begin(), row.end());
    ++m.rows_;
    return m;
}

Vec ExactMatrix::apply(const Vec& x) const
{
    if (x.size() != cols_) throw DimensionMismatch("vector length does not match matrix columns");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!x[c].is_zero() && !(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
    return y;
}

ExactMatrix ExactMatrix::transposed() const
{
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    ExactMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
        }
    return m;
}

namespace {

void swap_rows(ExactMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row[target] -= factor * row[source], over columns [from, cols).
void axpy_row(ExactMatrix& m, std::size_t target, std::size_t source, const Scalar& factor, std::size_t from)
{
    for (std::size_t c = from; c < m.cols(); ++c)
        if (!m(source, c).is_zero()) m(target, c) -= factor * m(source, c);
}

void scale_row(ExactMatrix& m, std::size_t r, const Scalar& factor, std::size_t from)
{
    for (std::size_t c = from; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) m(r, c) = m(r, c) * factor;
}

// Gauss-Jordan on m; every row operation is mirrored on `shadow` when given.
EchelonForm eliminate(ExactMatrix m, ExactMatrix* shadow)
{
    EchelonForm e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        swap_rows(m, row, piv);
        if (shadow) swap_rows(*shadow, row, piv);
        if (!m(row, col).is_one()) {
            Scalar inv = m(row, col).inverse();
            scale_row(m, row, inv, col);
            if (shadow) scale_row(*shadow, row, inv, 0);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Scalar f = m(r, col);
            axpy_row(m, r, row, f, col);
            if (shadow) axpy_row(*shadow, r, row, f, 0);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.rank = row;
    e.matrix = std::move(m);
    return e;
}

}  // namespace

EchelonForm echelon(ExactMatrix m) { return eliminate(std::move(m), nullptr); }

TrackedEchelon echelon_tracked(const ExactMatrix& m)
{
    TrackedEchelon t;
    t.transform = ExactMatrix::identity(m.rows());
    t.form = eliminate(m, &t.transform);
    return t;
}

EchelonForm augment(const TrackedEchelon& e, const Vec& b)
{
    const ExactMatrix& r = e.form.matrix;
    if (b.size() != r.rows()) throw DimensionMismatch("augmentation column length does not match rows");
    ExactMatrix m = r.with_column(e.transform.apply(b));
    EchelonForm out;
    out.pivot_cols = e.form.pivot_cols;
    out.rank = e.form.rank;
    const std::size_t last = r.cols();
    std::size_t piv = out.rank;
    while (piv < m.rows() && m(piv, last).is_zero()) ++piv;
    if (piv < m.rows()) {
        // Rows past the rank are zero on A's columns, so the new pivot row is a
        // unit vector and clearing its column touches nothing else.
        swap_rows(m, out.rank, piv);
        m(out.rank, last) = 1;
        for (std::size_t rr = 0; rr < m.rows(); ++rr) {
            if (rr == out.rank || m(rr, last).is_zero()) continue;
            m(rr, last) = 0;
        }
        out.pivot_cols.push_back(last);
        ++out.rank;
    }
    out.matrix = std::move(m);
    return out;
}

Vec reduce_row(const EchelonForm& e, std::span<const Scalar> row)
{
    const ExactMatrix& m = e.matrix;
    if (row.size() != m.cols()) throw DimensionMismatch("row length " + std::to_string(row.size()) + " != cols " + std::to_string(m.cols()));
    Vec res(row.begin(), row.end());
    for (std::size_t i = 0; i < e.rank; ++i) {
        const Scalar f = res[e.pivot_cols[i]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(i, c).is_zero()) res[c] -= f * m(i, c);
    }
    return res;
}

std::size_t rank_with_row(const EchelonForm& e, std::span<const Scalar> row)
{
    Vec res = reduce_row(e, row);
    for (const auto& x : res)
        if (!x.is_zero()) return e.rank + 1;
    return e.rank;
}

std::optional<Vec> sample_solution(const EchelonForm& augmented)
{
    const ExactMatrix& m = augmented.matrix;
    if (m.cols() == 0) return std::nullopt;
    const std::size_t n = m.cols() - 1;
    if (augmented.rank > 0 && augmented.pivot_cols[augmented.rank - 1] == n) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < augmented.rank; ++i) x[augmented.pivot_cols[i]] = m(i, n);
    return x;
}

std::vector<Vec> kernel_basis(const EchelonForm& e)
{
    const ExactMatrix& m = e.matrix;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < e.rank; ++i) is_pivot[e.pivot_cols[i]] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.rank; ++i) v[e.pivot_cols[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ew
