#pragma once

// Finite-dimensional associative unital algebras given by structure constants.
// The sparse table maps (i, j) to the nonzero coefficients of a_i * a_j; a
// missing pair means the product is zero.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobcell/matrix.hpp"
#include "frobcell/subspace.hpp"

namespace frobcell {

class Element {
public:
    Element() = default;
    explicit Element(Vec coords) : c_(std::move(coords)) {}

    static Element zero(const Field& f, std::size_t dim) {
        return Element(Vec(dim, FieldElement::zero(f)));
    }

    const Vec& coords() const { return c_; }
    std::size_t dim() const { return c_.size(); }
    const FieldElement& operator[](std::size_t i) const { return c_[i]; }
    FieldElement& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const { return vec_is_zero(c_); }

    Element operator+(const Element& o) const { return Element(vec_add(c_, o.c_)); }
    Element operator-(const Element& o) const { return Element(vec_sub(c_, o.c_)); }
    Element scaled(const FieldElement& k) const { return Element(vec_scale(k, c_)); }

    bool operator==(const Element& o) const { return c_ == o.c_; }
    bool operator!=(const Element& o) const { return c_ != o.c_; }

private:
    Vec c_;
};

struct ProductTerm {
    std::size_t k;
    FieldElement coeff;
    bool operator==(const ProductTerm& o) const { return k == o.k && coeff == o.coeff; }
};

using SparseTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<ProductTerm>>;

struct AlgebraViolation {
    std::string kind;    // "associativity" | "unit" | "label" | "table"
    std::string detail;  // witness indices, by label
};

class Algebra {
public:
    Algebra(Field f, std::vector<std::string> labels, SparseTable table, Vec unit_coords)
        : f_(std::move(f)), labels_(std::move(labels)), table_(std::move(table)),
          unit_(std::move(unit_coords)) {
        if (labels_.empty()) throw DimensionError("algebra must have positive dimension");
        if (unit_.coords().size() != labels_.size())
            throw DimensionError("unit coordinate length mismatch");
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second)
                throw FrobcellError("duplicate basis label '" + labels_[i] + "'");
        }
        for (const auto& [key, terms] : table_) {
            if (key.first >= dim() || key.second >= dim())
                throw DimensionError("table index out of range");
            for (const auto& t : terms)
                if (t.k >= dim()) throw DimensionError("table target index out of range");
        }
    }

    const Field& field() const { return f_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const SparseTable& table() const { return table_; }

    std::size_t index(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw FrobcellError("unknown basis label '" + label + "'");
        return it->second;
    }
    bool has_label(const std::string& label) const { return index_.count(label) != 0; }

    Element zero() const { return Element::zero(f_, dim()); }
    Element unit() const { return unit_; }
    Element basis(std::size_t i) const {
        Element e = zero();
        e[i] = FieldElement::one(f_);
        return e;
    }
    Element basis(const std::string& label) const { return basis(index(label)); }

    FieldElement scalar(long v) const { return FieldElement(f_, v); }

    // Structure constant r_{ijk}: coefficient of a_k in a_i a_j.
    FieldElement structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        auto it = table_.find({i, j});
        if (it == table_.end()) return FieldElement::zero(f_);
        for (const auto& t : it->second)
            if (t.k == k) return t.coeff;
        return FieldElement::zero(f_);
    }

    Element multiply_basis(std::size_t i, std::size_t j) const {
        Element r = zero();
        auto it = table_.find({i, j});
        if (it != table_.end())
            for (const auto& t : it->second) r[t.k] += t.coeff;
        return r;
    }

    Element multiply(const Element& x, const Element& y) const {
        if (x.dim() != dim() || y.dim() != dim())
            throw DimensionError("element dimension mismatch in product");
        Element r = zero();
        // Walk the sparse table, not the dense index square.
        for (const auto& [key, terms] : table_) {
            if (x[key.first].is_zero() || y[key.second].is_zero()) continue;
            const FieldElement c = x[key.first] * y[key.second];
            for (const auto& t : terms) r[t.k] += c * t.coeff;
        }
        return r;
    }

    // Matrix of y -> x*y on coordinates.
    Matrix left_mult(const Element& x) const {
        Matrix m(f_, dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Element col = multiply(x, basis(j));
            for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    // Matrix of y -> y*x on coordinates.
    Matrix right_mult(const Element& x) const {
        Matrix m(f_, dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Element col = multiply(basis(j), x);
            for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    // Checks the associativity identity on all index quadruples and the
    // two-sided unit law. Empty result means the table is a valid algebra.
    std::vector<AlgebraViolation> verify(std::size_t max_violations = 32) const {
        std::vector<AlgebraViolation> out;
        for (std::size_t i = 0; i < dim() && out.size() < max_violations; ++i) {
            for (std::size_t j = 0; j < dim() && out.size() < max_violations; ++j) {
                const Element ij = multiply_basis(i, j);
                for (std::size_t k = 0; k < dim() && out.size() < max_violations; ++k) {
                    const Element lhs = multiply(ij, basis(k));
                    const Element rhs = multiply(basis(i), multiply_basis(j, k));
                    if (lhs == rhs) continue;
                    for (std::size_t l = 0; l < dim(); ++l) {
                        if (lhs[l] == rhs[l]) continue;
                        out.push_back({"associativity",
                                       "(" + labels_[i] + "," + labels_[j] + "," + labels_[k] +
                                           "," + labels_[l] + "): " + lhs[l].to_string() +
                                           " != " + rhs[l].to_string()});
                        break;
                    }
                }
            }
        }
        for (std::size_t j = 0; j < dim() && out.size() < max_violations; ++j) {
            if (multiply(unit_, basis(j)) != basis(j))
                out.push_back({"unit", "unit * " + labels_[j] + " != " + labels_[j]});
            if (multiply(basis(j), unit_) != basis(j))
                out.push_back({"unit", labels_[j] + " * unit != " + labels_[j]});
        }
        return out;
    }

    // Same algebra expressed in the basis b_j = sum_i P(i,j) a_i.
    Algebra rebase(const Matrix& p, std::vector<std::string> new_labels) const {
        if (p.rows() != dim() || p.cols() != dim()) throw DimensionError("rebase: shape mismatch");
        const Matrix p_inv = p.inverse();  // throws if singular
        SparseTable t;
        for (std::size_t i = 0; i < dim(); ++i) {
            const Element bi = Element(p.col(i));
            for (std::size_t j = 0; j < dim(); ++j) {
                const Element prod = multiply(bi, Element(p.col(j)));
                const Vec nc = p_inv.apply(prod.coords());
                std::vector<ProductTerm> terms;
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!nc[k].is_zero()) terms.push_back({k, nc[k]});
                if (!terms.empty()) t[{i, j}] = std::move(terms);
            }
        }
        Vec new_unit = p_inv.apply(unit_.coords());
        return Algebra(f_, std::move(new_labels), std::move(t), std::move(new_unit));
    }

    std::string format_element(const Element& x) const {
        if (x.dim() != dim()) throw DimensionError("format_element: dimension mismatch");
        std::string s;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (x[i].is_one()) s += labels_[i];
            else
                s += x[i].to_string() + "*" + labels_[i];
        }
        return s.empty() ? "0" : s;
    }

private:
    Field f_;
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
    SparseTable table_;
    Element unit_;
};

// Linear endomorphism in coordinates; column j is the image of a_j.
class LinearMap {
public:
    explicit LinearMap(Matrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw DimensionError("linear map must be square");
    }

    static LinearMap identity(const Field& f, std::size_t n) {
        return LinearMap(Matrix::identity(f, n));
    }

    const Matrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

    Element apply(const Element& x) const { return Element(m_.apply(x.coords())); }
    LinearMap compose(const LinearMap& o) const { return LinearMap(m_ * o.m_); }
    LinearMap inverse() const { return LinearMap(m_.inverse()); }

    LinearMap power(long m) const {
        if (m < 0) return inverse().power(-m);
        LinearMap acc = identity(m_.field(), dim());
        LinearMap base = *this;
        while (m > 0) {
            if (m & 1) acc = acc.compose(base);
            base = base.compose(base);
            m >>= 1;
        }
        return acc;
    }

    bool is_identity() const { return m_ == Matrix::identity(m_.field(), dim()); }

    bool operator==(const LinearMap& o) const { return m_ == o.m_; }
    bool operator!=(const LinearMap& o) const { return m_ != o.m_; }

private:
    Matrix m_;
};

// Multiplicativity on all basis pairs plus unit preservation.
inline bool is_automorphism(const Algebra& a, const LinearMap& phi) {
    if (phi.dim() != a.dim()) throw DimensionError("map dimension mismatch");
    if (phi.apply(a.unit()) != a.unit()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Element lhs = phi.apply(a.multiply_basis(i, j));
            const Element rhs = a.multiply(phi.apply(a.basis(i)), phi.apply(a.basis(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

inline bool is_anti_automorphism(const Algebra& a, const LinearMap& phi) {
    if (phi.dim() != a.dim()) throw DimensionError("map dimension mismatch");
    if (phi.apply(a.unit()) != a.unit()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Element lhs = phi.apply(a.multiply_basis(i, j));
            const Element rhs = a.multiply(phi.apply(a.basis(j)), phi.apply(a.basis(i)));
            if (lhs != rhs) return false;
        }
    return true;
}

inline Subspace span_elements(const Algebra& a, const std::vector<Element>& xs) {
    std::vector<Vec> gens;
    gens.reserve(xs.size());
    for (const auto& x : xs) gens.push_back(x.coords());
    return Subspace::span(a.field(), a.dim(), gens);
}

// span{ s*t : s in basis(S), t in basis(T) }.
inline Subspace product_span(const Algebra& a, const Subspace& s, const Subspace& t) {
    if (s.ambient() != a.dim() || t.ambient() != a.dim())
        throw DimensionError("product_span: ambient mismatch");
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            gens.push_back(
                a.multiply(Element(s.basis_vector(i)), Element(t.basis_vector(j))).coords());
    return Subspace::span(a.field(), a.dim(), gens);
}

// S <= Z(A) and z*s in S for all spanning z of Z, s of S (two-sided follows
// from centrality).
inline bool is_ideal_of_center(const Algebra& a, const Subspace& center, const Subspace& s) {
    if (!center.contains(s)) return false;
    for (std::size_t i = 0; i < center.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            const Element prod =
                a.multiply(Element(center.basis_vector(i)), Element(s.basis_vector(j)));
            if (!s.contains(prod.coords())) return false;
        }
    return true;
}

}  // namespace frobcell
