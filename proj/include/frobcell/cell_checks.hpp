#pragma once

// The dual-basis identity battery for cellular Frobenius structures, the
// central elements e_lambda / e'_lambda and their spans, the per-cell central
// ideals, and the dual-cellularity implication suite.

#include <optional>
#include <string>
#include <vector>

#include "frobcell/cellular.hpp"

namespace frobcell {

namespace celldetail {

inline std::string slot(const CellDatum& cd, const CellLoc& l) {
    return "(" + cd.parts[l.part].tableaux[l.s] + "," + cd.parts[l.part].tableaux[l.t] + ")^" +
           cd.parts[l.part].lambda;
}

// Subspace spanned by the duals of the cells strictly above `part`.
inline Subspace above_span(const Algebra& a, const CellDatum& cd, const CellIndex& ix,
                           const Matrix& duals, bool columns, std::size_t part) {
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (cd.poset.lt(part, ix.loc(j).part))
            gens.push_back(columns ? duals.col(j) : duals.row(j));
    return Subspace::span(a.field(), a.dim(), gens);
}

}  // namespace celldetail

// Structure constants of the left-dual basis: coefficient vectors c with
// D_i D_j = sum_k c_k D_k, indexed by plain basis positions.
inline std::vector<std::vector<Vec>> dual_product_tensor(const Algebra& a,
                                                         const CellularDuals& du) {
    const std::size_t n = a.dim();
    const Matrix gt = du.left.inverse().transpose();
    std::vector<std::vector<Vec>> dcoef(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dcoef[i][j] =
                gt.apply(a.multiply(Element(du.left.row(i)), Element(du.left.row(j))).coords());
    return dcoef;
}

// The twelve dual-basis product identities. Expansion items (1),(2),(7),(8)
// compare against the structure-constant tensors of the C- and D-bases;
// congruence items (3),(9) reduce modulo the duals of higher cells; the rest
// are vanishing and exchange rules. Also cross-checks that the right-dual
// products expand with the same tensor as the left-dual products (apply the
// inverse Nakayama map to both sides).
inline CheckReport verify_cell_dual_identities(const Algebra& a, const CellDatum& cd,
                                               const CellConstants& csc,
                                               const CellularDuals& du) {
    CheckReport rep;
    if (!csc.valid || !csc.index) {
        rep.add("lemma-3.2", "skipped: cell datum is not valid");
        return rep;
    }
    const CellIndex& ix = *csc.index;
    const std::size_t n = a.dim();

    auto tr = [&](std::size_t i) { return ix.transpose(cd, i); };
    auto dvec = [&](std::size_t i) { return Element(du.right.col(tr(i))); };  // d at slot loc(i)
    auto Dvec = [&](std::size_t i) { return Element(du.left.row(tr(i))); };   // D at slot loc(i)

    // Coefficients of products of left duals over the left-dual basis:
    // sum_k c_k D_k = G^-T c, so c = G^T * product.
    const std::vector<std::vector<Vec>> dcoef = dual_product_tensor(a, du);
    // R tensor in cellular indexing.
    auto Rten = [&](std::size_t i, std::size_t j, std::size_t k) {
        return dcoef[tr(i)][tr(j)][tr(k)];
    };

    // d_i d_j must expand with the same coefficients as D_i D_j.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element rhs = a.zero();
            for (std::size_t k = 0; k < n; ++k)
                if (!dcoef[i][j][k].is_zero())
                    rhs = rhs + Element(du.right.col(k)).scaled(dcoef[i][j][k]);
            if (a.multiply(Element(du.right.col(i)), Element(du.right.col(j))) != rhs)
                rep.add("dual-product-tensor",
                        "right-dual product at (" + a.label(i) + "," + a.label(j) +
                            ") does not match the left-dual tensor");
        }

    for (std::size_t i = 0; i < n; ++i) {      // cellular slot (mu, U, V)
        const CellLoc& li = ix.loc(i);
        for (std::size_t j = 0; j < n; ++j) {  // cellular slot (lambda, S, T)
            const CellLoc& lj = ix.loc(j);
            const Element dc = a.multiply(Dvec(i), a.basis(j));   // D_{U,V} C_{S,T}
            const Element cdl = a.multiply(a.basis(j), dvec(i));  // C_{S,T} d_{U,V}

            Element rhs1 = a.zero(), rhs2 = a.zero(), rhs7 = a.zero(), rhs8 = a.zero();
            for (std::size_t b = 0; b < n; ++b) {
                const FieldElement c1 = a.structure_constant(j, tr(b), tr(i));
                if (!c1.is_zero()) rhs1 = rhs1 + Dvec(b).scaled(c1);
                const FieldElement c2 = Rten(tr(b), i, tr(j));
                if (!c2.is_zero()) rhs2 = rhs2 + a.basis(b).scaled(c2);
                const FieldElement c7 = a.structure_constant(tr(b), j, tr(i));
                if (!c7.is_zero()) rhs7 = rhs7 + dvec(b).scaled(c7);
                const FieldElement c8 = Rten(i, tr(b), tr(j));
                if (!c8.is_zero()) rhs8 = rhs8 + a.basis(b).scaled(c8);
            }
            if (dc != rhs1)
                rep.add("lemma-3.2.1", celldetail::slot(cd, li) + " x " + celldetail::slot(cd, lj));
            if (dc != rhs2)
                rep.add("lemma-3.2.2", celldetail::slot(cd, li) + " x " + celldetail::slot(cd, lj));
            if (cdl != rhs7)
                rep.add("lemma-3.2.7", celldetail::slot(cd, lj) + " x " + celldetail::slot(cd, li));
            if (cdl != rhs8)
                rep.add("lemma-3.2.8", celldetail::slot(cd, lj) + " x " + celldetail::slot(cd, li));

            // Vanishing rules.
            if (li.part == lj.part && li.t != lj.s && !dc.is_zero())
                rep.add("lemma-3.2.4", celldetail::slot(cd, li) + " x " + celldetail::slot(cd, lj));
            if (!cd.poset.leq(li.part, lj.part) && !dc.is_zero())
                rep.add("lemma-3.2.5", celldetail::slot(cd, li) + " x " + celldetail::slot(cd, lj));
            if (li.part == lj.part && lj.t != li.s && !cdl.is_zero())
                rep.add("lemma-3.2.10", celldetail::slot(cd, lj) + " x " + celldetail::slot(cd, li));
            if (!cd.poset.leq(li.part, lj.part) && !cdl.is_zero())
                rep.add("lemma-3.2.11", celldetail::slot(cd, lj) + " x " + celldetail::slot(cd, li));
        }
    }

    // Congruences (3) and (9), modulo duals of strictly higher cells.
    const LinearMap& inv = *csc.involution;
    const LinearMap alpha(du.left.transpose() * du.right.inverse());
    const LinearMap alpha_inv = alpha.inverse();
    for (std::size_t p = 0; p < cd.parts.size(); ++p) {
        const std::size_t m = cd.parts[p].tableaux.size();
        const Subspace hi_d = celldetail::above_span(a, cd, ix, du.right, true, p);
        const Subspace hi_D = celldetail::above_span(a, cd, ix, du.left, false, p);
        for (std::size_t b = 0; b < n; ++b) {
            // x = i(alpha^{-1}(a_b)) and y = alpha(a_b).
            const Element x = inv.apply(alpha_inv.apply(a.basis(b)));
            const Element y = alpha.apply(a.basis(b));
            const Matrix rx = csc.r_of(a, p, x);
            const Matrix ry = csc.r_of(a, p, y);
            for (std::size_t u = 0; u < m; ++u)
                for (std::size_t v = 0; v < m; ++v) {
                    const std::size_t slot_idx = cd.cidx(p, u, v);
                    Element lhs3 = a.multiply(a.basis(b), Element(du.left.row(tr(slot_idx))));
                    for (std::size_t up = 0; up < m; ++up) {
                        const FieldElement c = rx.at(u, up);
                        if (!c.is_zero())
                            lhs3 = lhs3 -
                                   Element(du.left.row(tr(cd.cidx(p, up, v)))).scaled(c);
                    }
                    if (!hi_D.contains(lhs3.coords()))
                        rep.add("lemma-3.2.3", "a=" + a.label(b) + " at " +
                                                   celldetail::slot(cd, ix.loc(slot_idx)));

                    Element lhs9 = a.multiply(Element(du.right.col(tr(slot_idx))), a.basis(b));
                    for (std::size_t vp = 0; vp < m; ++vp) {
                        const FieldElement c = ry.at(v, vp);
                        if (!c.is_zero())
                            lhs9 = lhs9 -
                                   Element(du.right.col(tr(cd.cidx(p, u, vp)))).scaled(c);
                    }
                    if (!hi_d.contains(lhs9.coords()))
                        rep.add("lemma-3.2.9", "a=" + a.label(b) + " at " +
                                                   celldetail::slot(cd, ix.loc(slot_idx)));
                }
        }
    }

    // Exchange rules (6) and (12).
    for (std::size_t p = 0; p < cd.parts.size(); ++p) {
        const std::size_t m = cd.parts[p].tableaux.size();
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t q = 0; q < m; ++q) {
                std::optional<Element> first6, first12;
                for (std::size_t s = 0; s < m; ++s) {
                    const Element v6 = a.multiply(Element(du.left.row(tr(cd.cidx(p, t, s)))),
                                                  a.basis(cd.cidx(p, s, q)));
                    const Element v12 = a.multiply(a.basis(cd.cidx(p, t, s)),
                                                   Element(du.right.col(tr(cd.cidx(p, s, q)))));
                    if (!first6) first6 = v6;
                    else if (*first6 != v6)
                        rep.add("lemma-3.2.6", "part '" + cd.parts[p].lambda + "' (T,Q)=(" +
                                                   cd.parts[p].tableaux[t] + "," +
                                                   cd.parts[p].tableaux[q] + ")");
                    if (!first12) first12 = v12;
                    else if (*first12 != v12)
                        rep.add("lemma-3.2.12", "part '" + cd.parts[p].lambda + "' (S,P)=(" +
                                                    cd.parts[p].tableaux[t] + "," +
                                                    cd.parts[p].tableaux[q] + ")");
                }
            }
    }
    return rep;
}

// e_lambda for one cell and one column choice T.
inline Element e_lambda(const Algebra& a, const CellDatum& cd, const CellularDuals& du,
                        std::size_t part, std::size_t t) {
    const std::size_t m = cd.parts[part].tableaux.size();
    Element e = a.zero();
    for (std::size_t s = 0; s < m; ++s) {
        const std::size_t i = cd.cidx(part, s, t);
        e = e + a.multiply(a.basis(i), Element(du.right.col(i)));
    }
    return e;
}

struct LAlphaResult {
    std::vector<Element> e;  // e_lambda per part, computed at T = 0
    Subspace span;
    CheckReport report;  // T-independence, inclusion chain, dimension bound
};

inline LAlphaResult l_alpha(const Algebra& a, const CellDatum& cd, const CellConstants& csc,
                            const CellularDuals& du, const DualData& dd) {
    LAlphaResult out{{}, Subspace(a.field(), a.dim()), {}};
    for (std::size_t p = 0; p < cd.parts.size(); ++p) {
        const Element e0 = e_lambda(a, cd, du, p, 0);
        for (std::size_t t = 1; t < cd.parts[p].tableaux.size(); ++t)
            if (e_lambda(a, cd, du, p, t) != e0)
                out.report.add("e-lambda", "e of cell '" + cd.parts[p].lambda +
                                               "' depends on the column choice T=" +
                                               cd.parts[p].tableaux[t]);
        out.e.push_back(e0);
    }
    out.span = span_elements(a, out.e);

    const Subspace za = twisted_center(a, dd.nakayama);
    const HigmanFamily hf = higman_family(a, dd);
    if (!out.span.contains(hf.h_alpha)) out.report.add("lemma-3.9", "H_a is not inside L_a");
    if (!za.contains(out.span)) out.report.add("lemma-3.9", "L_a is not inside Z_a");
    for (std::size_t p = 0; p < out.e.size(); ++p)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.multiply(out.e[p], a.basis(j)) !=
                a.multiply(dd.nakayama.apply(a.basis(j)), out.e[p]))
                out.report.add("lemma-3.9", "e of cell '" + cd.parts[p].lambda +
                                                "' fails the twisted-center equation at " +
                                                a.label(j));
    if (out.span.dim() < csc.lambda_zero().size())
        out.report.add("lemma-3.9", "dim L_a = " + std::to_string(out.span.dim()) +
                                        " is below |Lambda_0| = " +
                                        std::to_string(csc.lambda_zero().size()));
    return out;
}

struct LAlphaPrimeResult {
    std::vector<Element> e_prime;  // sum_S D_{S,S} C_{S,S} per part
    Subspace span;
};

inline LAlphaPrimeResult l_alpha_prime(const Algebra& a, const CellDatum& cd,
                                       const CellularDuals& du) {
    LAlphaPrimeResult out{{}, Subspace(a.field(), a.dim())};
    for (std::size_t p = 0; p < cd.parts.size(); ++p) {
        Element e = a.zero();
        for (std::size_t s = 0; s < cd.parts[p].tableaux.size(); ++s) {
            const std::size_t i = cd.cidx(p, s, s);
            e = e + a.multiply(Element(du.left.row(i)), a.basis(i));
        }
        out.e_prime.push_back(e);
    }
    out.span = span_elements(a, out.e_prime);
    return out;
}

struct ZLambdaResult {
    std::vector<Subspace> ideals;  // per part
    CheckReport report;
};

// Z_lambda = { sum_S C_{S,T} x D_{T,S} : x in Z_{alpha^-1} }: equals
// e_lambda x, sits inside Z(A) as an ideal, and has pairwise zero products.
inline ZLambdaResult z_lambda_ideals(const Algebra& a, const CellDatum& cd,
                                     const CellConstants& csc, const CellularDuals& du,
                                     const DualData& dd) {
    ZLambdaResult out;
    if (!csc.valid) {
        out.report.add("prop-3.11", "skipped: cell datum is not valid");
        return out;
    }
    const Subspace z = center(a);
    const Subspace zai = twisted_center(a, LinearMap(dd.nakayama.inverse()));
    for (std::size_t p = 0; p < cd.parts.size(); ++p) {
        const std::size_t m = cd.parts[p].tableaux.size();
        const Element ep = e_lambda(a, cd, du, p, 0);
        std::vector<Element> gens;
        for (std::size_t xi = 0; xi < zai.dim(); ++xi) {
            const Element x = Element(zai.basis_vector(xi));
            std::optional<Element> val;
            for (std::size_t t = 0; t < m; ++t) {
                Element v = a.zero();
                for (std::size_t s = 0; s < m; ++s) {
                    const std::size_t i = cd.cidx(p, s, t);
                    v = v + a.multiply(a.multiply(a.basis(i), x), Element(du.left.row(i)));
                }
                if (v != a.multiply(ep, x))
                    out.report.add("prop-3.11", "cell '" + cd.parts[p].lambda +
                                                    "': sum C x D at T=" +
                                                    cd.parts[p].tableaux[t] + " differs from e*x");
                if (!val) val = v;
            }
            gens.push_back(*val);
        }
        Subspace zl = span_elements(a, gens);
        if (!is_ideal_of_center(a, z, zl))
            out.report.add("prop-3.11",
                           "Z of cell '" + cd.parts[p].lambda + "' is not an ideal of Z(A)");
        out.ideals.push_back(std::move(zl));
    }
    for (std::size_t p = 0; p < out.ideals.size(); ++p)
        for (std::size_t q = 0; q < out.ideals.size(); ++q) {
            if (p == q) continue;
            if (!product_span(a, out.ideals[p], out.ideals[q]).is_zero())
                out.report.add("prop-3.11", "Z('" + cd.parts[p].lambda + "') Z('" +
                                                cd.parts[q].lambda + "') != 0");
        }
    return out;
}

struct DualCellularity {
    bool p_d = false;     // i(d_{S,T}) = d_{T,S} for all cells
    bool p_D = false;     // i(D_{S,T}) = D_{T,S} for all cells
    bool p_tau = false;   // tau o i = tau
    bool p_sym = false;   // Gram symmetric (alpha = id)
    bool i_alpha_commutes = false;
    std::string p_d_witness, p_D_witness;
    CheckReport implications;                       // theorem-3.7, lemma-3.6, lemma-3.4
    std::optional<bool> d_basis_cellular_opposite;  // evaluated when p_d holds
    std::optional<bool> alpha_basis_cellular;       // {alpha(C_{S,T})} with the same datum
};

inline DualCellularity cellularity_of_duals(const Algebra& a, const CellDatum& cd,
                                            const CellConstants& csc, const CellularDuals& du,
                                            const TraceForm& t, const DualData& dd) {
    const CellIndex& ix = *csc.index;
    const LinearMap& inv = *csc.involution;
    DualCellularity out;

    out.p_d = true;
    out.p_D = true;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const std::size_t tj = ix.transpose(cd, j);
        if (out.p_d && inv.apply(Element(du.right.col(j))) != Element(du.right.col(tj))) {
            out.p_d = false;
            out.p_d_witness = "i(d paired with " + a.label(j) + ") = " +
                              a.format_element(inv.apply(Element(du.right.col(j)))) +
                              " != " + a.format_element(Element(du.right.col(tj)));
        }
        if (out.p_D && inv.apply(Element(du.left.row(j))) != Element(du.left.row(tj))) {
            out.p_D = false;
            out.p_D_witness = "i(D paired with " + a.label(j) + ") = " +
                              a.format_element(inv.apply(Element(du.left.row(j)))) +
                              " != " + a.format_element(Element(du.left.row(tj)));
        }
    }
    out.p_tau = true;
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (t(inv.apply(a.basis(j))) != t(a.basis(j))) out.p_tau = false;
    out.p_sym = is_symmetric(dd);
    out.i_alpha_commutes = inv.compose(dd.nakayama) == dd.nakayama.compose(inv);

    if (out.p_d && !out.p_sym)
        out.implications.add("theorem-3.7", "right dual basis cellular but Gram not symmetric");
    if (out.p_D && !out.p_sym)
        out.implications.add("theorem-3.7", "left dual basis cellular but Gram not symmetric");
    if (out.p_D && !out.p_tau)
        out.implications.add("lemma-3.6", "i(D_{S,T}) = D_{T,S} holds but tau o i != tau");
    const bool b1 = out.p_d && out.p_D, b2 = out.p_sym, b3 = out.p_tau;
    if ((b1 && b2 != b3) || (b2 && b1 != b3) || (b3 && b1 != b2))
        out.implications.add("lemma-3.4", "one statement holds but the other two differ");

    // When the right dual table mirrors the grid, it must itself be a
    // cellular basis for the opposite order.
    if (out.p_d) {
        std::vector<std::string> labels;
        labels.reserve(a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) labels.push_back("d(" + a.label(j) + ")");
        const Algebra ad = a.rebase(du.right, labels);
        CellDatum cdd;
        cdd.poset = cd.poset.opposite();
        cdd.parts = cd.parts;
        for (auto& part : cdd.parts)
            for (std::size_t s = 0; s < part.grid.size(); ++s)
                for (std::size_t t2 = 0; t2 < s; ++t2) std::swap(part.grid[s][t2], part.grid[t2][s]);
        cdd.grid_transpose_involution = false;
        cdd.involution = du.right.inverse() * inv.matrix() * du.right;
        out.d_basis_cellular_opposite = verify_cell_datum(ad, cdd).valid;
    }

    // {alpha(C_{S,T})} with the same grids and order, and i carried along;
    // that family is cellular exactly when i and alpha commute.
    {
        std::vector<std::string> labels;
        labels.reserve(a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) labels.push_back("alpha(" + a.label(j) + ")");
        const Matrix am = dd.nakayama.matrix();
        const Algebra aa = a.rebase(am, labels);
        CellDatum cda = cd;
        cda.grid_transpose_involution = false;
        cda.involution = am.inverse() * inv.matrix() * am;
        out.alpha_basis_cellular = verify_cell_datum(aa, cda).valid;
        if (*out.alpha_basis_cellular != out.i_alpha_commutes)
            out.implications.add("lemma-alpha-basis",
                                 out.i_alpha_commutes
                                     ? "i alpha = alpha i but the alpha image is not cellular"
                                     : "alpha image cellular although i alpha != alpha i");
    }
    return out;
}

// Try every linear extension of the hinted order; returns the first total
// order for which the datum verifies.
inline std::optional<Poset> search_poset(const Algebra& a, const CellDatum& cd) {
    for (const auto& perm : cd.poset.linear_extensions()) {
        CellDatum trial = cd;
        trial.poset = Poset::chain(cd.poset.elements(), perm);
        if (verify_cell_datum(a, trial).valid) return trial.poset;
    }
    return std::nullopt;
}

}  // namespace frobcell
