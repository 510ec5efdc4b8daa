// Acceptance suite: one pass/fail line per criterion, sub-check details on
// failure, exit 0 only if every criterion passes. All comparisons are exact.

#include <array>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobcell/verify.hpp"
#include "support/test_algebras.hpp"

using namespace frobcell;
using namespace testsupport;

namespace {

const Field Q = Field::rationals();
FieldElement fe(const char* s) { return FieldElement::parse(Q, s); }

struct Criterion {
    int id;
    std::string title;
    std::vector<std::pair<bool, std::string>> subs;

    void check(bool ok, const std::string& what) { subs.push_back({ok, what}); }
    bool pass() const {
        for (const auto& [ok, _] : subs)
            if (!ok) return false;
        return true;
    }
};

std::vector<Criterion> results;

Criterion& crit(int id, const std::string& title) {
    results.push_back(Criterion{id, title, {}});
    return results.back();
}

struct PreparedCell {
    Fixture fx;
    DualData dd;
    CellConstants csc;
    CellularDuals du;
};

PreparedCell prep(Fixture fx) {
    DualData dd = dual_bases(fx.algebra, fx.trace);
    CellConstants csc = verify_cell_datum(fx.algebra, *fx.cell);
    if (!csc.index) throw FrobcellError("cell datum is structurally broken");
    CellularDuals du = dual_cell_tables(fx.algebra, *fx.cell, *csc.index, fx.trace, dd);
    return {std::move(fx), std::move(dd), std::move(csc), std::move(du)};
}

std::string describe(const CheckReport& rep, std::size_t max_items = 2) {
    std::string s;
    for (std::size_t i = 0; i < rep.violations.size() && i < max_items; ++i) {
        if (i) s += "; ";
        s += rep.violations[i].check + ": " + rep.violations[i].detail;
    }
    return s;
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    Criterion& c = crit(1, "6-dim fixture: Gram, dual tables, Nakayama matrix");
    PreparedCell p = prep(fixtures::local_e43(Q, fe("2")));
    const Algebra& a = p.fx.algebra;

    c.check(p.dd.gram.rank() == 6, "Gram matrix nonsingular");
    c.check(p.dd.gram != p.dd.gram.transpose(), "Gram matrix asymmetric");

    auto rd = [&](const char* l) { return p.dd.right_dual(a.index(l)); };
    auto ld = [&](const char* l) { return p.dd.left_dual(a.index(l)); };
    const bool right_ok = rd("bc") == a.basis("e") && rd("a") == a.basis("d") &&
                          rd("b") == a.basis("c") &&
                          rd("c") == a.basis("b").scaled(fe("1/2")) &&
                          rd("d") == a.basis("a") && rd("e") == a.basis("bc");
    c.check(right_ok, "right dual table is (1; d, c, b/2, a; bc)");
    const bool left_ok = ld("bc") == a.basis("e") && ld("a") == a.basis("d") &&
                         ld("b") == a.basis("c").scaled(fe("1/2")) && ld("c") == a.basis("b") &&
                         ld("d") == a.basis("a") && ld("e") == a.basis("bc");
    c.check(left_ok, "left dual table is (1; d, c/2, b, a; bc)");

    Matrix pm(Q, 6, 6);
    const char* order[] = {"bc", "a", "b", "c", "d", "e"};
    for (std::size_t j = 0; j < 6; ++j) {
        const Element dj = rd(order[j]);
        for (std::size_t i = 0; i < 6; ++i) pm.at(i, j) = dj[i];
    }
    Matrix expect = Matrix::identity(Q, 6);
    expect.at(2, 2) = fe("1/2");
    expect.at(3, 3) = fe("2");
    c.check(pm.inverse() * p.dd.nakayama.matrix() * pm == expect,
            "Nakayama matrix in right-dual order is diag(1, 1, 1/2, 2, 1, 1)");
    c.check(is_automorphism(a, p.dd.nakayama), "Nakayama map is multiplicative");
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    Criterion& c = crit(2, "6-dim fixture: trace i-invariant yet duals not mirrored");
    PreparedCell p = prep(fixtures::local_e43(Q, fe("2")));
    const DualCellularity dc =
        cellularity_of_duals(p.fx.algebra, *p.fx.cell, p.csc, p.du, p.fx.trace, p.dd);
    c.check(dc.p_tau, "tau o i = tau");
    c.check(!dc.p_d, "i(d_{S,T}) = d_{T,S} fails (witness: " + dc.p_d_witness + ")");
    c.check(!dc.p_sym, "the algebra is not symmetric");
    c.check(dc.implications.ok(), "mirror => symmetric implication vacuously satisfied");
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    Criterion& c = crit(3, "6-dim fixture: central element, i-alpha, paired products");
    PreparedCell p = prep(fixtures::local_e43(Q, fe("2")));
    const Algebra& a = p.fx.algebra;
    const CellDatum& cd = *p.fx.cell;

    const Subspace z = center(a);
    const Subspace za = twisted_center(a, p.dd.nakayama);
    c.check(z.contains(a.basis("bc").coords()) && za.contains(a.basis("bc").coords()),
            "bc lies in Z(A) and in Z_alpha(A)");

    const LinearMap& inv = *p.csc.involution;
    c.check(inv.compose(p.dd.nakayama) != p.dd.nakayama.compose(inv),
            "i alpha != alpha i");

    const Element v1 = a.multiply(p.du.d(cd, 1, 0, 0), a.basis(cd.cidx(1, 0, 0)));
    c.check(v1 == a.multiply(a.basis("d"), a.basis("a")) && v1 == a.basis("bc"),
            "d_{1,1} C_{1,1} = d*a = bc");
    const Element v2 = a.multiply(p.du.d(cd, 1, 0, 1), a.basis(cd.cidx(1, 1, 0)));
    c.check(v2 == a.basis("bc").scaled(fe("1/2")), "d_{1,2} C_{2,1} = bc/2");
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    Criterion& c = crit(4, "star-quiver fixture: builder, central spans, products");
    PreparedCell p = prep(fixtures::quiver_e42(Q));
    const Algebra& a = p.fx.algebra;
    const CellDatum& cd = *p.fx.cell;

    c.check(a.dim() == 14, "presentation builder yields dimension 14");

    const LAlphaResult la = l_alpha(a, cd, p.csc, p.du, p.dd);
    const Subspace claimed =
        span_elements(a, {a.basis("a3b1") + a.basis("b1a1"), a.basis("a1b3"), a.basis("a2b2")});
    {
        const bool well_defined = la.report.ok();
        std::string msg = "dim L_alpha = 3 with basis {a3b1+b1a1, a1b3, a2b2}";
        if (!well_defined) msg += " -- " + describe(la.report, 1);
        c.check(well_defined && la.span.dim() == 3 && la.span == claimed, msg);
    }

    const LAlphaPrimeResult lp = l_alpha_prime(a, cd, p.du);
    {
        const Subspace claimed_prime =
            span_elements(a, {a.basis("a3b1").scaled(fe("3")), a.basis("a1b3").scaled(fe("2")),
                              a.basis("a2b2")});
        std::string got = "{";
        for (std::size_t i = 0; i < lp.e_prime.size(); ++i) {
            if (i) got += ", ";
            got += a.format_element(lp.e_prime[i]);
        }
        got += "}";
        c.check(lp.span == claimed_prime,
                "L_alpha' generated by {3 a3b1, 2 a1b3, a2b2} -- computed e' = " + got);
    }
    {
        const bool gated = la.report.ok();
        c.check(gated && la.span != lp.span,
                std::string("L_alpha != L_alpha'") +
                    (gated ? "" : " -- skipped: L_alpha ill-defined (e depends on T)"));
    }
    {
        // Over F_3 the primed span must be strictly smaller.
        const Field f3 = Field::prime(3);
        PreparedCell p3 = prep(fixtures::quiver_e42(f3));
        const LAlphaResult la3 = l_alpha(p3.fx.algebra, *p3.fx.cell, p3.csc, p3.du, p3.dd);
        const LAlphaPrimeResult lp3 = l_alpha_prime(p3.fx.algebra, *p3.fx.cell, p3.du);
        const bool gated = la3.report.ok();
        c.check(gated && la3.span.contains(lp3.span) && la3.span != lp3.span,
                std::string("over F_3, L_alpha' is strictly inside L_alpha") +
                    (gated ? "" : " -- skipped: L_alpha ill-defined (e depends on T)"));
    }

    c.check(p.csc.involution->compose(p.dd.nakayama) == p.dd.nakayama.compose(*p.csc.involution),
            "i alpha = alpha i");

    const Element d13 = p.du.d(cd, 1, 0, 2);
    c.check(p.fx.algebra.multiply(d13, a.basis(cd.cidx(1, 0, 1))) == a.basis("a1"),
            "d^2_{1,3} C^2_{1,2} = a1");
    const Element d11 = p.du.d(cd, 2, 0, 0);
    c.check(p.fx.algebra.multiply(d11, a.basis(cd.cidx(1, 2, 1))) == a.basis("a2"),
            "d^3_{1,1} C^2_{3,2} = a2");
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    Criterion& c = crit(5, "4-dim fixture: symmetry split across parameters");
    {
        const Fixture fx = fixtures::nakayama_nesbitt(Q, fe("1"), fe("2"));
        const DualData dd = dual_bases(fx.algebra, fx.trace);
        c.check(!is_symmetric(dd), "u=1, v=2: non-symmetric Frobenius");
        const CellConstants csc = verify_cell_datum(fx.algebra, *fx.cell);
        std::string msg = "u=1, v=2: cellular basis verified";
        if (!csc.valid) msg += " -- " + describe(csc.report, 1);
        c.check(csc.valid, msg);
    }
    {
        const Fixture fx = fixtures::nakayama_nesbitt(Q, fe("1"), fe("1"));
        const DualData dd = dual_bases(fx.algebra, fx.trace);
        c.check(is_symmetric(dd), "u=v=1: symmetric");
        c.check(dd.nakayama.is_identity(), "u=v=1: alpha = id");
        c.check(dd.right_duals == dd.left_duals, "u=v=1: d = D");
        c.check(verify_cell_datum(fx.algebra, *fx.cell).valid, "u=v=1: cell datum valid");
    }
}

// ---------------------------------------------------------------- criterion 6

std::vector<CellFixture> random_pool() {
    std::mt19937_64 rng(0xacce97ed);
    std::vector<CellFixture> out;
    const std::vector<Field> fields = {Q, Field::prime(5), Field::prime(97)};
    for (int i = 0; i < 40; ++i) {
        const Field& f = fields[i % fields.size()];
        out.push_back(matrix_algebra(f, 2, random_invertible(f, 2, rng)));
    }
    for (int i = 0; i < 6; ++i) {
        const Field& f = fields[i % 2];
        out.push_back(matrix_algebra(f, 3, random_invertible(f, 3, rng)));
    }
    for (int i = 0; i < 24; ++i) {
        const Field& f = fields[i % fields.size()];
        const std::size_t n = 2 + i % 4;
        Vec tau(n, FieldElement::zero(f));
        for (auto& x : tau) x = random_scalar(f, rng);
        while (tau[n - 1].is_zero()) tau[n - 1] = random_scalar(f, rng);
        out.push_back(truncated_poly(f, n, tau));
    }
    for (int i = 0; i < 12; ++i) {
        const Field& f = fields[i % fields.size()];
        FieldElement lam = random_scalar(f, rng);
        while (lam.is_zero() || lam.is_one()) lam = random_scalar(f, rng);
        out.push_back(from_fixture(fixtures::local_e43(f, lam)));
    }
    for (int i = 0; i < 10; ++i) {
        const Field& f = fields[i % fields.size()];
        FieldElement u = random_scalar(f, rng);
        while (u.is_zero()) u = random_scalar(f, rng);
        out.push_back(from_fixture(fixtures::nakayama_nesbitt(f, u, u)));
    }
    for (int i = 0; i < 8; ++i) {
        const Field& f = fields[i % fields.size()];
        Vec tau(2, FieldElement::zero(f));
        for (auto& x : tau) x = random_scalar(f, rng);
        while (tau[1].is_zero()) tau[1] = random_scalar(f, rng);
        out.push_back(
            direct_sum(truncated_poly(f, 2, tau), matrix_algebra(f, 2, random_invertible(f, 2, rng))));
    }
    return out;
}

void criterion_6() {
    Criterion& c = crit(6, "law suites on fixtures and 100 randomized algebras");

    // Fixtures with valid cell data run everything; the two with invalid
    // candidates run the dual-basis and twisted-center laws.
    for (const auto& [fx, suite] :
         std::vector<std::pair<Fixture, std::string>>{
             {fixtures::local_e43(Q, fe("2")), "all"},
             {fixtures::local_e43(Field::prime(3), FieldElement(Field::prime(3), 2)), "all"},
             {fixtures::nakayama_nesbitt(Q, fe("1"), fe("1")), "all"},
             {fixtures::nakayama_nesbitt(Q, fe("1"), fe("2")), "section2"},
             {fixtures::quiver_e42(Q), "section2"}}) {
        const VerifyOutcome out = run_suite(fx.algebra, fx.trace, fx.cell, suite);
        std::string msg = "fixture " + fx.name + " over " + fx.algebra.field().to_string() +
                          " passes suite " + suite;
        if (!out.ok()) msg += " -- " + describe(out.selected, 1);
        c.check(out.ok(), msg);
    }

    const auto pool = random_pool();
    c.check(pool.size() >= 100,
            "pool holds " + std::to_string(pool.size()) + " randomized instances");
    std::size_t failures = 0, mirrored = 0;
    std::string first;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const VerifyOutcome out = run_suite(pool[i].algebra, pool[i].trace, pool[i].cell, "all");
        if (!(out.ok() && out.cell_datum_valid)) {
            ++failures;
            if (first.empty())
                first = pool[i].name + ": " + describe(out.everything, 1);
        }
        if (out.dual_cellularity && out.dual_cellularity->p_d) ++mirrored;
    }
    c.check(failures == 0,
            "all randomized instances pass the full suite" +
                (failures ? " -- first failure " + first : std::string()));
    c.check(mirrored > 0, "the mirror implication is exercised non-vacuously (" +
                              std::to_string(mirrored) + " symmetric instances)");
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    Criterion& c = crit(7, "oracle equivalence for both example tables");
    {
        // Brute-force 4x4 matrix-unit arithmetic, independent of the library
        // matrix class.
        using Mat4 = std::array<std::array<FieldElement, 4>, 4>;
        auto zero4 = [] {
            Mat4 m;
            for (auto& row : m) row.fill(FieldElement::zero(Q));
            return m;
        };
        auto mul4 = [&](const Mat4& x, const Mat4& y) {
            Mat4 r = zero4();
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < 4; ++k)
                    for (int j = 0; j < 4; ++j) r[i][j] += x[i][k] * y[k][j];
            return r;
        };
        const FieldElement u = fe("1"), v = fe("2");
        Mat4 c1 = zero4(), c2 = zero4(), c3 = zero4(), c4 = zero4();
        c1[0][3] = fe("1");
        c2[0][2] = fe("1");
        c2[1][3] = u;
        c3[0][1] = fe("1");
        c3[2][3] = v;
        for (int i = 0; i < 4; ++i) c4[i][i] = fe("1");
        const std::array<Mat4, 4> mats = {c1, c2, c3, c4};

        const Fixture fx = fixtures::nakayama_nesbitt(Q, u, v);
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i)
            for (std::size_t j = 0; j < 4 && ok; ++j) {
                const Element prod = fx.algebra.multiply_basis(i, j);
                Mat4 got = zero4();
                for (std::size_t k = 0; k < 4; ++k)
                    for (int r = 0; r < 4; ++r)
                        for (int s = 0; s < 4; ++s) got[r][s] += prod[k] * mats[k][r][s];
                ok = got == mul4(mats[i], mats[j]);
            }
        c.check(ok, "4-dim table agrees with brute-force matrix products on all 16 pairs");
    }
    {
        // Hand-coded 6x6 table straight from the defining relations.
        const FieldElement lam = fe("2");
        const Fixture fx = fixtures::local_e43(Q, lam);
        const Algebra& a = fx.algebra;
        auto idx = [&](const char* l) { return a.index(l); };
        SparseTable hand;
        const std::size_t E = idx("e"), A = idx("a"), B = idx("b"), C = idx("c"), D = idx("d"),
                          BC = idx("bc");
        for (std::size_t k = 0; k < 6; ++k) {
            hand[{E, k}] = {{k, fe("1")}};
            if (k != E) hand[{k, E}] = {{k, fe("1")}};
        }
        hand[{A, D}] = {{BC, fe("1")}};
        hand[{D, A}] = {{BC, fe("1")}};
        hand[{B, C}] = {{BC, fe("1")}};
        hand[{C, B}] = {{BC, lam}};
        const Algebra oracle(Q, a.labels(), hand, a.unit().coords());
        bool ok = true;
        for (std::size_t i = 0; i < 6 && ok; ++i)
            for (std::size_t j = 0; j < 6 && ok; ++j)
                ok = a.multiply_basis(i, j) == oracle.multiply_basis(i, j);
        c.check(ok, "presentation-built table agrees with the hand-coded table on all 36 products");
    }
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    Criterion& c = crit(8, "degradation paths: degenerate trace, bad table, bad grid");
    const Fixture fx = fixtures::local_e43(Q, fe("2"));
    {
        bool ok = false;
        try {
            dual_bases(fx.algebra, TraceForm{Vec(6, FieldElement::zero(Q))});
        } catch (const NotFrobeniusError& e) {
            ok = e.rank == 0 && !vec_is_zero(e.witness);
        }
        c.check(ok, "degenerate trace raises the rank and a kernel witness");
    }
    {
        SparseTable t = fx.algebra.table();
        t[{fx.algebra.index("b"), fx.algebra.index("c")}] = {{fx.algebra.index("e"), fe("1")}};
        const Algebra broken(Q, fx.algebra.labels(), t, fx.algebra.unit().coords());
        const auto bad = broken.verify();
        c.check(!bad.empty() && bad.front().kind == "associativity" &&
                    bad.front().detail.find("b,c") != std::string::npos,
                "perturbed structure constant is reported as a named associativity violation");
    }
    {
        CellDatum scrambled = *fx.cell;
        const CellConstants good = verify_cell_datum(fx.algebra, scrambled);
        scrambled.grid_transpose_involution = false;
        scrambled.involution = good.involution->matrix();
        std::swap(scrambled.parts[1].grid[0][0], scrambled.parts[1].grid[0][1]);
        const CellConstants csc = verify_cell_datum(fx.algebra, scrambled);
        bool named = false;
        for (const auto& v : csc.report.violations)
            named |= (v.check == "axiom-C2" || v.check == "axiom-C3");
        c.check(!csc.valid && named, "scrambled cell grid is reported against C2/C3");
    }
}

}  // namespace

int main() {
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
    } catch (const std::exception& e) {
        std::cout << "[ERROR] acceptance aborted: " << e.what() << "\n";
        return 2;
    }

    int passed = 0;
    for (const auto& c : results) {
        std::cout << (c.pass() ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title
                  << "\n";
        if (!c.pass())
            for (const auto& [ok, what] : c.subs)
                std::cout << "    " << (ok ? "ok  " : "FAIL") << "  " << what << "\n";
        passed += c.pass();
    }
    std::cout << "summary: " << passed << "/" << results.size() << " criteria pass\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
