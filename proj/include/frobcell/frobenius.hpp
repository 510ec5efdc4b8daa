#pragma once

// Trace functionals, Gram matrices, dual bases and the Nakayama automorphism.
//
// The input is a trace vector tau; the induced form f(a,b) = tau(ab) is then
// associative by construction. Conventions, asserted via the delta-conditions
// on every construction:
//   right duals: column j of `right_duals` solves  tau(a_i d_j) = delta_ij,
//   left duals:  row j of `left_duals` solves      tau(D_j a_i) = delta_ij,
//   both matrices equal G^-1; the Nakayama map alpha sends d_i to D_i, i.e.
//   matrix(alpha) = left_duals^T * right_duals^-1 = G^-T G.

#include <optional>
#include <string>
#include <vector>

#include "frobcell/algebra.hpp"

namespace frobcell {

struct NotFrobeniusError : FrobcellError {
    NotFrobeniusError(const std::string& msg, std::size_t rank_, Vec witness_)
        : FrobcellError(msg), rank(rank_), witness(std::move(witness_)) {}
    std::size_t rank;
    Vec witness;  // nonzero vector in the Gram kernel
};

struct TraceForm {
    Vec tau;

    FieldElement operator()(const Element& x) const { return vec_dot(tau, x.coords()); }
};

struct DualData {
    Matrix gram;
    Matrix right_duals;  // column j = coordinates of d_j
    Matrix left_duals;   // row j = coordinates of D_j
    LinearMap nakayama;

    Element right_dual(std::size_t j) const { return Element(right_duals.col(j)); }
    Element left_dual(std::size_t j) const { return Element(left_duals.row(j)); }
};

inline Matrix gram(const Algebra& a, const TraceForm& t) {
    if (t.tau.size() != a.dim()) throw DimensionError("trace vector length mismatch");
    Matrix g(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            g.at(i, j) = vec_dot(t.tau, a.multiply_basis(i, j).coords());
    return g;
}

inline DualData dual_bases(const Algebra& a, const TraceForm& t) {
    Matrix g = gram(a, t);
    {
        const Matrix ker = g.nullspace();
        if (ker.rows() > 0)
            throw NotFrobeniusError("the trace form is degenerate (Gram rank " +
                                        std::to_string(a.dim() - ker.rows()) + " of " +
                                        std::to_string(a.dim()) + ")",
                                    a.dim() - ker.rows(), ker.row(0));
    }
    const Matrix ginv = g.inverse();
    const Matrix right = ginv;  // G X = I
    const Matrix left = ginv;   // Y G = I
    // alpha maps column d_i to D_i^T-as-column.
    const Matrix alpha_m = left.transpose() * right.inverse();
    DualData dd{g, right, left, LinearMap(alpha_m)};

    // Delta-conditions, verified directly rather than trusted from inversion.
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const FieldElement rd = t(a.multiply(a.basis(i), dd.right_dual(j)));
            const FieldElement ld = t(a.multiply(dd.left_dual(j), a.basis(i)));
            const FieldElement want =
                i == j ? FieldElement::one(a.field()) : FieldElement::zero(a.field());
            if (rd != want || ld != want)
                throw FrobcellError("internal: dual-basis delta condition failed at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
        }
    // tau(ab) = tau(alpha(b) a) on all basis pairs.
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const FieldElement lhs = t(a.multiply_basis(i, j));
            const FieldElement rhs = t(a.multiply(dd.nakayama.apply(a.basis(j)), a.basis(i)));
            if (lhs != rhs)
                throw FrobcellError("internal: Nakayama form identity failed at (" +
                                    a.label(i) + "," + a.label(j) + ")");
        }
    if (!is_automorphism(a, dd.nakayama))
        throw FrobcellError("internal: Nakayama map is not an algebra automorphism");
    return dd;
}

// True iff the Gram matrix is symmetric; cross-checked against alpha = id.
inline bool is_symmetric(const DualData& dd) {
    const bool sym = dd.gram == dd.gram.transpose();
    if (sym != dd.nakayama.is_identity())
        throw FrobcellError("internal: symmetry and alpha = id disagree");
    return sym;
}

// Smallest m <= max_m with alpha^m = id, if any.
inline std::optional<long> nakayama_order(const DualData& dd, long max_m) {
    if (max_m < 1) throw FrobcellError("max_m must be positive");
    LinearMap acc = dd.nakayama;
    for (long m = 1; m <= max_m; ++m) {
        if (acc.is_identity()) return m;
        acc = acc.compose(dd.nakayama);
    }
    return std::nullopt;
}

struct Violation {
    std::string check;   // stable check id
    std::string detail;  // witness, by label where possible
};

struct CheckReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string check, std::string detail) {
        violations.push_back({std::move(check), std::move(detail)});
    }
    void merge(const CheckReport& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

// Dual-basis expansion identities:
//   (1) a_i d_j = sum_k r_kij d_k,   (2) D_i a_j = sum_k r_jki D_k.
inline CheckReport verify_lemma_2_3(const Algebra& a, const DualData& dd) {
    CheckReport rep;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element rhs1 = a.zero();
            Element rhs2 = a.zero();
            for (std::size_t k = 0; k < n; ++k) {
                const FieldElement r1 = a.structure_constant(k, i, j);
                if (!r1.is_zero()) rhs1 = rhs1 + dd.right_dual(k).scaled(r1);
                const FieldElement r2 = a.structure_constant(j, k, i);
                if (!r2.is_zero()) rhs2 = rhs2 + dd.left_dual(k).scaled(r2);
            }
            if (a.multiply(a.basis(i), dd.right_dual(j)) != rhs1)
                rep.add("lemma-2.3.1", "(i,j)=(" + a.label(i) + "," + a.label(j) + ")");
            if (a.multiply(dd.left_dual(i), a.basis(j)) != rhs2)
                rep.add("lemma-2.3.2", "(i,j)=(" + a.label(i) + "," + a.label(j) + ")");
        }
    return rep;
}

}  // namespace frobcell
