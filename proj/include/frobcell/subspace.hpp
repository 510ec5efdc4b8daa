#pragma once

// Subspaces of a coordinate space, held as canonical RREF basis matrices.
// Two subspaces are equal iff their basis matrices are identical.

#include <vector>

#include "frobcell/matrix.hpp"

namespace frobcell {

class Subspace {
public:
    Subspace(Field f, std::size_t ambient)
        : f_(std::move(f)), ambient_(ambient), basis_(f_, 0, ambient) {}

    static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& gens) {
        Matrix m = Matrix::from_rows(f, gens, ambient);
        m.rref();
        Subspace s(f, ambient);
        s.basis_ = drop_zero_rows(m);
        return s;
    }

    // Rows of `m` are generators (need not be reduced).
    static Subspace row_space(const Matrix& m) {
        Matrix r = m;
        r.rref();
        Subspace s(m.field(), m.cols());
        s.basis_ = drop_zero_rows(r);
        return s;
    }

    const Field& field() const { return f_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool is_zero() const { return dim() == 0; }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw DimensionError("contains: ambient mismatch");
        Vec r = reduce(v);
        return vec_is_zero(r);
    }

    // Canonical residue of v modulo this subspace.
    Vec reduce(const Vec& v) const {
        Vec r = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = pivot_col(i);
            if (!r[p].is_zero()) r = vec_sub(r, vec_scale(r[p], basis_.row(i)));
        }
        return r;
    }

    bool contains(const Subspace& o) const {
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_vector(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        require_compatible(o);
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < dim(); ++i) gens.push_back(basis_vector(i));
        for (std::size_t i = 0; i < o.dim(); ++i) gens.push_back(o.basis_vector(i));
        return span(f_, ambient_, gens);
    }

    Subspace intersect(const Subspace& o) const {
        require_compatible(o);
        if (is_zero() || o.is_zero()) return Subspace(f_, ambient_);
        // x = c^T U = d^T W  <=>  (c, d) in the nullspace of [U^T | -W^T].
        Matrix m(f_, ambient_, dim() + o.dim());
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_.at(j, i);
        for (std::size_t j = 0; j < o.dim(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i) m.at(i, dim() + j) = -o.basis_.at(j, i);
        Matrix ns = m.nullspace();
        std::vector<Vec> gens;
        for (std::size_t r = 0; r < ns.rows(); ++r) {
            Vec x(ambient_, FieldElement::zero(f_));
            for (std::size_t j = 0; j < dim(); ++j)
                if (!ns.at(r, j).is_zero()) x = vec_add(x, vec_scale(ns.at(r, j), basis_.row(j)));
            gens.push_back(std::move(x));
        }
        return span(f_, ambient_, gens);
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && f_ == o.f_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    void require_compatible(const Subspace& o) const {
        if (ambient_ != o.ambient_ || f_ != o.f_)
            throw DimensionError("subspace operands live in different ambient spaces");
    }

    std::size_t pivot_col(std::size_t row) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_.at(row, j).is_zero()) return j;
        throw FrobcellError("zero row in subspace basis");
    }

    static Matrix drop_zero_rows(const Matrix& m) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Vec r = m.row(i);
            if (!vec_is_zero(r)) rows.push_back(std::move(r));
        }
        return Matrix::from_rows(m.field(), rows, m.cols());
    }

    Field f_;
    std::size_t ambient_;
    Matrix basis_;
};

}  // namespace frobcell
