#pragma once

// Orchestrates every check suite over one (algebra, trace, cell datum)
// triple. Check ids are stable strings ("lemma-2.3.1", "axiom-C2", ...); a
// suite selector picks rows by prefix:
//   all        everything below
//   algebra    table axioms (associativity, unit)
//   section2   dual-basis and twisted-center laws (lemma-2.*, higman-ideal,
//              remark-alpha-power)
//   section3   cell axioms and cellular dual laws (axiom-C*, phi, cell-chain,
//              delta-*, lemma-3.*, theorem-3.7, prop-3.11, e-lambda)
//   lemma-X.Y  one family, e.g. lemma-2.3 or lemma-3.2.4

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frobcell/cell_checks.hpp"

namespace frobcell {

struct VerifyOutcome {
    CheckReport selected;          // violations matching the suite
    CheckReport everything;       // all violations found
    bool cell_datum_valid = false;
    bool had_cell_datum = false;
    std::optional<DualCellularity> dual_cellularity;
    std::vector<std::string> notes;

    bool ok() const { return selected.ok(); }
};

namespace verifydetail {

inline bool selected_by(const std::string& suite, const std::string& check) {
    if (suite == "all") return true;
    if (suite == "algebra") return check.rfind("algebra-", 0) == 0;
    if (suite == "section2")
        return check.rfind("lemma-2.", 0) == 0 || check.rfind("higman", 0) == 0 ||
               check.rfind("remark-alpha-power", 0) == 0 || check.rfind("algebra-", 0) == 0;
    if (suite == "section3")
        return check.rfind("lemma-3.", 0) == 0 || check.rfind("axiom-C", 0) == 0 ||
               check.rfind("phi", 0) == 0 || check.rfind("cell-chain", 0) == 0 ||
               check.rfind("delta-", 0) == 0 || check.rfind("theorem-3.7", 0) == 0 ||
               check.rfind("prop-3.11", 0) == 0 || check.rfind("e-lambda", 0) == 0 ||
               check.rfind("lemma-3", 0) == 0;
    return check == suite || check.rfind(suite + ".", 0) == 0;
}

}  // namespace verifydetail

// Runs the full battery and filters by suite. Throws NotFrobeniusError if the
// trace is degenerate (a precondition, not a violation).
inline VerifyOutcome run_suite(const Algebra& a, const TraceForm& t,
                               const std::optional<CellDatum>& cd, const std::string& suite) {
    VerifyOutcome out;
    CheckReport& all = out.everything;

    for (const auto& v : a.verify()) all.add("algebra-" + v.kind, v.detail);

    const DualData dd = dual_bases(a, t);  // asserts the form identity internally
    all.merge(verify_lemma_2_3(a, dd));
    all.merge(verify_section2(a, dd));
    const HigmanFamily hf = higman_family(a, dd);
    for (long m = 0; m <= 3; ++m) {
        const TwistedHigmanPower thp = twisted_higman_power(a, dd, m);
        all.merge(thp.identity);
        if (m == 0 && thp.space != hf.h)
            all.add("remark-alpha-power", "m=0 does not recover the Higman ideal");
        if (m == 1 && thp.space != hf.h_alpha_inv)
            all.add("remark-alpha-power", "m=1 does not recover H_{a^-1}");
    }

    if (cd) {
        out.had_cell_datum = true;
        const CellConstants csc = verify_cell_datum(a, *cd);
        all.merge(csc.report);
        out.cell_datum_valid = csc.valid;
        if (csc.valid) {
            const CellularDuals du = dual_cell_tables(a, *cd, *csc.index, t, dd);
            all.merge(du.delta_report);
            all.merge(verify_cell_dual_identities(a, *cd, csc, du));
            const LAlphaResult la = l_alpha(a, *cd, csc, du, dd);
            all.merge(la.report);
            all.merge(z_lambda_ideals(a, *cd, csc, du, dd).report);
            const DualCellularity dc = cellularity_of_duals(a, *cd, csc, du, t, dd);
            all.merge(dc.implications);
            if (dc.p_d && dc.d_basis_cellular_opposite && !*dc.d_basis_cellular_opposite)
                all.add("theorem-3.7",
                        "right dual table mirrors the grid but is not cellular for the "
                        "opposite order");
            out.dual_cellularity = dc;
        } else {
            out.notes.push_back("cell datum invalid: cellular checks were skipped");
        }
    }

    for (const auto& v : all.violations)
        if (verifydetail::selected_by(suite, v.check)) out.selected.violations.push_back(v);
    return out;
}

}  // namespace frobcell
