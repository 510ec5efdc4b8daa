#pragma once

// Full analysis document over one spec: Frobenius data, center family,
// cellular sections, and the open-comparison rows. Output is deterministic;
// the structured form is the source of truth and the text form renders it.

#include <string>
#include <vector>

#include "frobcell/spec_io.hpp"
#include "frobcell/verify.hpp"

namespace frobcell {

namespace repdetail {

inline Json subspace_json(const Algebra& a, const Subspace& s) {
    Json j;
    j["dim"] = s.dim();
    Json basis = Json::array();
    for (std::size_t i = 0; i < s.dim(); ++i)
        basis.push_back(a.format_element(Element(s.basis_vector(i))));
    j["basis"] = basis;
    return j;
}

inline Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).to_string());
        rows.push_back(r);
    }
    return rows;
}

inline Json violations_json(const CheckReport& rep) {
    Json out = Json::array();
    for (const auto& v : rep.violations) out.push_back(Json{{"check", v.check}, {"detail", v.detail}});
    return out;
}

}  // namespace repdetail

// Throws NotFrobeniusError when the trace is degenerate; degrades the
// cellular sections when the cell datum is invalid or absent.
inline Json structured_report(const Algebra& a, const TraceForm& t,
                              const std::optional<CellDatum>& cd, long order_probe_max = 60) {
    Json rep;
    rep["dim"] = a.dim();
    rep["field"] = a.field().to_string();
    rep["basis"] = a.labels();

    const DualData dd = dual_bases(a, t);
    {
        Json fj;
        fj["gram_rank"] = a.dim();
        fj["symmetric"] = is_symmetric(dd);
        fj["nakayama_matrix"] = repdetail::matrix_json(dd.nakayama.matrix());
        const auto ord = nakayama_order(dd, order_probe_max);
        if (ord) fj["nakayama_order"] = *ord;
        else
            fj["nakayama_order"] = "exceeds " + std::to_string(order_probe_max);
        rep["frobenius"] = fj;
    }

    const CenterReport cr = center_report(a, dd);
    {
        Json cj;
        cj["Z"] = repdetail::subspace_json(a, cr.center);
        cj["Z_alpha"] = repdetail::subspace_json(a, cr.z_alpha);
        cj["Z_alpha_inv"] = repdetail::subspace_json(a, cr.z_alpha_inv);
        cj["H"] = repdetail::subspace_json(a, cr.higman.h);
        cj["H_alpha"] = repdetail::subspace_json(a, cr.higman.h_alpha);
        cj["H_alpha_inv"] = repdetail::subspace_json(a, cr.higman.h_alpha_inv);
        // Open comparisons, reported as dimensions without any claim.
        Json open;
        open["H_alpha_equals_Z_alpha"] = cr.higman.h_alpha == cr.z_alpha;
        open["dim_H_alpha"] = cr.higman.h_alpha.dim();
        open["dim_Z_alpha"] = cr.z_alpha.dim();
        cj["open-question-after-lemma-2.6"] = open;
        rep["centers"] = cj;
    }

    if (cd) {
        Json sj;
        const CellConstants csc = verify_cell_datum(a, *cd);
        sj["cell_datum_valid"] = csc.valid;
        if (!csc.report.ok()) sj["violations"] = repdetail::violations_json(csc.report);
        if (csc.valid) {
            const CellularDuals du = dual_cell_tables(a, *cd, *csc.index, t, dd);
            Json lz = Json::array();
            for (auto p : csc.lambda_zero()) lz.push_back(cd->parts[p].lambda);
            sj["lambda_zero"] = lz;

            // alpha in the right-dual basis, ordered cell by cell with slots
            // row-major (the displayed order of the dual tables).
            {
                Matrix p(a.field(), a.dim(), a.dim());
                std::size_t col = 0;
                for (const auto& part : cd->parts)
                    for (const auto& row : part.grid)
                        for (auto b : row) {
                            for (std::size_t i = 0; i < a.dim(); ++i)
                                p.at(i, col) = du.right.at(i, b);
                            ++col;
                        }
                sj["nakayama_in_right_dual_order"] =
                    repdetail::matrix_json(p.inverse() * dd.nakayama.matrix() * p);
            }

            const LAlphaResult la = l_alpha(a, *cd, csc, du, dd);
            Json laj = repdetail::subspace_json(a, la.span);
            Json evals = Json::array();
            for (std::size_t p = 0; p < la.e.size(); ++p)
                evals.push_back(Json::array({cd->parts[p].lambda, a.format_element(la.e[p])}));
            laj["e"] = evals;
            if (!la.report.ok()) laj["violations"] = repdetail::violations_json(la.report);
            sj["L_alpha"] = laj;

            const LAlphaPrimeResult lp = l_alpha_prime(a, *cd, du);
            Json lpj = repdetail::subspace_json(a, lp.span);
            Json epvals = Json::array();
            for (std::size_t p = 0; p < lp.e_prime.size(); ++p)
                epvals.push_back(
                    Json::array({cd->parts[p].lambda, a.format_element(lp.e_prime[p])}));
            lpj["e_prime"] = epvals;
            sj["L_alpha_prime"] = lpj;
            sj["L_alpha_equals_L_alpha_prime"] = la.span == lp.span;

            const ZLambdaResult zl = z_lambda_ideals(a, *cd, csc, du, dd);
            Json zj = Json::object();
            Subspace z_big(a.field(), a.dim());
            for (std::size_t p = 0; p < zl.ideals.size(); ++p) {
                zj[cd->parts[p].lambda] = repdetail::subspace_json(a, zl.ideals[p]);
                z_big = z_big.sum(zl.ideals[p]);
            }
            sj["Z_lambda"] = zj;
            // Second open comparison: the central ideal generated by all
            // Z_lambda against the Higman ideal.
            const Subspace z_ideal = product_span(a, cr.center, z_big).sum(z_big);
            Json open;
            open["dim_Z_Lambda"] = z_ideal.dim();
            open["dim_H"] = cr.higman.h.dim();
            open["Z_Lambda_equals_H"] = z_ideal == cr.higman.h;
            open["Z_Lambda_inside_H"] = cr.higman.h.contains(z_ideal);
            open["H_inside_Z_Lambda"] = z_ideal.contains(cr.higman.h);
            sj["open-question-after-prop-3.11"] = open;

            const DualCellularity dc = cellularity_of_duals(a, *cd, csc, du, t, dd);
            Json dj;
            dj["right_duals_mirror_grid"] = dc.p_d;
            dj["left_duals_mirror_grid"] = dc.p_D;
            dj["trace_involution_invariant"] = dc.p_tau;
            dj["symmetric"] = dc.p_sym;
            dj["i_alpha_commutes"] = dc.i_alpha_commutes;
            if (!dc.p_d) dj["right_witness"] = dc.p_d_witness;
            if (!dc.p_D) dj["left_witness"] = dc.p_D_witness;
            if (dc.d_basis_cellular_opposite)
                dj["d_basis_cellular_for_opposite_order"] = *dc.d_basis_cellular_opposite;
            if (dc.alpha_basis_cellular) dj["alpha_basis_cellular"] = *dc.alpha_basis_cellular;
            if (!dc.implications.ok())
                dj["violations"] = repdetail::violations_json(dc.implications);
            sj["dual_cellularity"] = dj;
        }
        rep["cellular"] = sj;
    }
    return rep;
}

namespace repdetail {

inline bool inline_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& v : j)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

inline std::string inline_text(const Json& j) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) s += ", ";
        s += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
    }
    return s + "]";
}

inline void render(std::string& out, const std::string& indent, const Json& j) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !inline_array(v))) {
                out += indent + k + ":\n";
                render(out, indent + "  ", v);
            } else if (v.is_array()) {
                out += indent + k + ": " + inline_text(v) + "\n";
            } else {
                out += indent + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (inline_array(v)) {
                out += indent + "- " + inline_text(v) + "\n";
            } else if (v.is_object() || v.is_array()) {
                out += indent + "-\n";
                render(out, indent + "  ", v);
            } else {
                out += indent + "- " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
            }
        }
    }
}

}  // namespace repdetail

inline std::string text_report(const Json& structured) {
    std::string out;
    repdetail::render(out, "", structured);
    return out;
}

}  // namespace frobcell
