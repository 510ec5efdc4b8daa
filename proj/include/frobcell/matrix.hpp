#pragma once

// Dense exact matrices with Gaussian elimination (first-nonzero pivoting).
// RREF output is canonical, so row spaces compare by matrix equality.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobcell/scalar.hpp"

namespace frobcell {

using Vec = std::vector<FieldElement>;

struct DimensionError : FrobcellError {
    explicit DimensionError(const std::string& msg) : FrobcellError(msg) {}
};

struct SingularSystemError : FrobcellError {
    SingularSystemError(const std::string& msg, std::size_t rank_) : FrobcellError(msg), rank(rank_) {}
    std::size_t rank;
};

class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols),
          data_(rows * cols, FieldElement::zero(f_)) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        Vec r(data_.begin() + static_cast<long>(i * cols_),
              data_.begin() + static_cast<long>((i + 1) * cols_));
        return r;
    }
    Vec col(std::size_t j) const {
        Vec c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }
    void set_row(std::size_t i, const Vec& r) {
        if (r.size() != cols_) throw DimensionError("row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix r(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
        Vec r(rows_, FieldElement::zero(f_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix diff shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t lead = 0;
        for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
            std::size_t sel = lead;
            while (sel < rows_ && at(sel, col).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != lead)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(lead, j));
            const FieldElement inv = at(lead, col).inverse();
            for (std::size_t j = col; j < cols_; ++j) at(lead, j) = at(lead, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == lead || at(i, col).is_zero()) continue;
                const FieldElement c = at(i, col);
                for (std::size_t j = col; j < cols_; ++j) at(i, j) -= c * at(lead, j);
            }
            pivots.push_back(col);
            ++lead;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Basis of {x : M x = 0}, rows in canonical RREF.
    Matrix nullspace() const {
        Matrix m = *this;
        const auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<Vec> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            Vec v(cols_, FieldElement::zero(f_));
            v[free] = FieldElement::one(f_);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
            basis.push_back(std::move(v));
        }
        Matrix b = from_rows(f_, basis, cols_);
        b.rref();
        return b;
    }

    // Unique solution of (*this) X = B; throws if the system is singular or
    // inconsistent. Exact, no tolerance.
    Matrix solve(const Matrix& b) const {
        if (b.rows() != rows_) throw DimensionError("solve: row count mismatch");
        Matrix aug(f_, rows_, cols_ + b.cols());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, cols_ + j) = b.at(i, j);
        }
        const auto pivots = aug.rref();
        std::size_t rank_a = 0;
        for (auto p : pivots) {
            if (p < cols_) ++rank_a;
            else
                throw SingularSystemError("inconsistent linear system", rank_a);
        }
        if (rank_a < cols_)
            throw SingularSystemError("singular system: rank " + std::to_string(rank_a) + " of " +
                                          std::to_string(cols_),
                                      rank_a);
        Matrix x(f_, cols_, b.cols());
        for (std::size_t i = 0; i < cols_; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, cols_ + j);
        return x;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw DimensionError("inverse of non-square matrix");
        return solve(identity(f_, rows_));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[ ";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += at(i, j).to_string();
                if (j + 1 < cols_) s += ", ";
            }
            s += " ]\n";
        }
        return s;
    }

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector sum length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector diff length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec vec_scale(const FieldElement& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = c * x;
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

inline FieldElement vec_dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("dot length mismatch");
    if (a.empty()) throw DimensionError("dot of empty vectors");
    FieldElement s = FieldElement::zero(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

}  // namespace frobcell
