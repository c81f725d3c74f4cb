#pragma once

#include <optional>
#include <vector>

#include "skewcell/field.hpp"

namespace skewcell {

// Dense matrix over one tower field. All elimination is exact; pivots are
// the first nonzero entry in scan order, so results are deterministic.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, size_t rows, size_t cols)
        : f_(std::move(f)), r_(rows), c_(cols), e_(rows * cols, Scalar::zero(f_)) {}

    static Matrix identity(const FieldPtr& f, size_t n) {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }
    static Matrix from_columns(const FieldPtr& f, const std::vector<std::vector<Scalar>>& cols) {
        size_t rows = cols.empty() ? 0 : cols[0].size();
        Matrix m(f, rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == rows, "ShapeMismatch", "ragged columns");
            for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    const FieldPtr& field() const { return f_; }

    Scalar& at(size_t i, size_t j) { return e_[i * c_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * c_ + j]; }

    std::vector<Scalar> column(size_t j) const {
        std::vector<Scalar> v;
        v.reserve(r_);
        for (size_t i = 0; i < r_; ++i) v.push_back(at(i, j));
        return v;
    }
    std::vector<Scalar> row(size_t i) const {
        std::vector<Scalar> v(e_.begin() + i * c_, e_.begin() + (i + 1) * c_);
        return v;
    }

    bool operator==(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) return false;
        for (size_t k = 0; k < e_.size(); ++k)
            if (e_[k] != o.e_[k]) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        require(c_ == o.r_, "ShapeMismatch", "matrix product shapes");
        Matrix m(f_, r_, o.c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t k = 0; k < c_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (size_t j = 0; j < o.c_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
                }
            }
        return m;
    }
    Matrix operator+(const Matrix& o) const {
        require(r_ == o.r_ && c_ == o.c_, "ShapeMismatch", "matrix sum shapes");
        Matrix m = *this;
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = m.e_[k] + o.e_[k];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        require(r_ == o.r_ && c_ == o.c_, "ShapeMismatch", "matrix difference shapes");
        Matrix m = *this;
        for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = m.e_[k] - o.e_[k];
        return m;
    }
    Matrix scaled(const Scalar& s) const {
        Matrix m = *this;
        for (auto& x : m.e_) x = x * s;
        return m;
    }
    Matrix transpose() const {
        Matrix m(f_, c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        require(v.size() == c_, "ShapeMismatch", "matrix-vector shapes");
        std::vector<Scalar> out(r_, Scalar::zero(f_));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + at(i, j) * v[j];
        return out;
    }
    bool is_zero() const {
        for (auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    // in-place reduced row echelon form; returns pivot column indices
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < c_ && row < r_; ++col) {
            size_t sel = row;
            while (sel < r_ && at(sel, col).is_zero()) ++sel;
            if (sel == r_) continue;
            if (sel != row)
                for (size_t j = 0; j < c_; ++j) std::swap(at(row, j), at(sel, j));
            Scalar inv = at(row, col).inv();
            for (size_t j = col; j < c_; ++j) at(row, j) = at(row, j) * inv;
            for (size_t i = 0; i < r_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                Scalar factor = at(i, col);
                for (size_t j = col; j < c_; ++j)
                    at(i, j) = at(i, j) - factor * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // spanning, linearly independent right-kernel basis (columns)
    std::vector<std::vector<Scalar>> kernel_basis() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(c_, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Scalar>> basis;
        for (size_t j = 0; j < c_; ++j) {
            if (is_pivot[j]) continue;
            std::vector<Scalar> v(c_, Scalar::zero(f_));
            v[j] = Scalar::one(f_);
            for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, j);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // one exact solution of (*this) x = rhs per rhs column, or nullopt
    std::optional<Matrix> solve(const Matrix& rhs) const {
        require(rhs.r_ == r_, "ShapeMismatch", "solve shapes");
        Matrix aug(f_, r_, c_ + rhs.c_);
        for (size_t i = 0; i < r_; ++i) {
            for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
            for (size_t j = 0; j < rhs.c_; ++j) aug.at(i, c_ + j) = rhs.at(i, j);
        }
        auto pivots = aug.rref();
        for (size_t k = 0; k < pivots.size(); ++k)
            if (pivots[k] >= c_) return std::nullopt; // pivot in the rhs block
        Matrix x(f_, c_, rhs.c_);
        for (size_t k = 0; k < pivots.size(); ++k)
            for (size_t j = 0; j < rhs.c_; ++j) x.at(pivots[k], j) = aug.at(k, c_ + j);
        return x;
    }

    bool invertible() const { return r_ == c_ && rank() == r_; }

private:
    FieldPtr f_;
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> e_;
};

// rank of the span of a set of coordinate vectors
inline size_t span_rank(const FieldPtr& f, const std::vector<std::vector<Scalar>>& vecs) {
    if (vecs.empty()) return 0;
    Matrix m(f, vecs.size(), vecs[0].size());
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < vecs[i].size(); ++j) m.at(i, j) = vecs[i][j];
    return m.rank();
}

// do two collections of vectors span the same subspace?
inline bool same_span(const FieldPtr& f, const std::vector<std::vector<Scalar>>& a,
                      const std::vector<std::vector<Scalar>>& b) {
    size_t ra = span_rank(f, a), rb = span_rank(f, b);
    if (ra != rb) return false;
    std::vector<std::vector<Scalar>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_rank(f, both) == ra;
}

} // namespace skewcell
