#include <catch2/catch_amalgamated.hpp>

#include "frobcell/fixtures.hpp"
#include "frobcell/frobenius.hpp"

using namespace frobcell;

namespace {

const Field Q = Field::rationals();
FieldElement fe(const char* s) { return FieldElement::parse(Q, s); }

// Group algebra of the two-element group: basis {1, g}, g^2 = 1.
Algebra z2_group_algebra(const Field& f) {
    const FieldElement one = FieldElement::one(f);
    SparseTable t;
    t[{0, 0}] = {{0, one}};
    t[{0, 1}] = {{1, one}};
    t[{1, 0}] = {{1, one}};
    t[{1, 1}] = {{0, one}};
    Vec unit{one, FieldElement::zero(f)};
    return Algebra(f, {"1", "g"}, t, unit);
}

}  // namespace

TEST_CASE("gram: zero trace gives the zero matrix and is rejected as degenerate") {
    const Fixture fx = fixtures::local_e43(Q, fe("2"));
    const TraceForm zero{Vec(fx.algebra.dim(), FieldElement::zero(Q))};
    CHECK(gram(fx.algebra, zero).is_zero());
    try {
        dual_bases(fx.algebra, zero);
        FAIL("expected NotFrobeniusError");
    } catch (const NotFrobeniusError& e) {
        CHECK(e.rank == 0);
        CHECK_FALSE(vec_is_zero(e.witness));  // a kernel vector as witness
    }
}

TEST_CASE("gram of the 6-dimensional fixture has exactly the six expected entries") {
    const Fixture fx = fixtures::local_e43(Q, fe("2"));
    const Algebra& a = fx.algebra;
    const Matrix g = gram(a, fx.trace);
    const auto e = a.index("e"), ia = a.index("a"), ib = a.index("b"), ic = a.index("c"),
               id = a.index("d"), ibc = a.index("bc");
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (!g.at(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 6);
    CHECK(g.at(e, ibc) == fe("1"));
    CHECK(g.at(ibc, e) == fe("1"));
    CHECK(g.at(ia, id) == fe("1"));
    CHECK(g.at(id, ia) == fe("1"));
    CHECK(g.at(ib, ic) == fe("1"));
    CHECK(g.at(ic, ib) == fe("2"));  // lambda
}

TEST_CASE("gram of the 4-dimensional fixture is the antidiagonal 1, v, u, 1") {
    const Fixture fx = fixtures::nakayama_nesbitt(Q, fe("1"), fe("2"));
    const Matrix g = gram(fx.algebra, fx.trace);
    Matrix expect(Q, 4, 4);
    expect.at(0, 3) = fe("1");
    expect.at(1, 2) = fe("2");  // v
    expect.at(2, 1) = fe("1");  // u
    expect.at(3, 0) = fe("1");
    CHECK(g == expect);
}

TEST_CASE("dual tables of the 6-dimensional fixture match the displayed values") {
    const Fixture fx = fixtures::local_e43(Q, fe("2"));
    const Algebra& a = fx.algebra;
    const DualData dd = dual_bases(a, fx.trace);

    auto rd = [&](const char* l) { return dd.right_dual(a.index(l)); };
    auto ld = [&](const char* l) { return dd.left_dual(a.index(l)); };

    // Right dual table (1; d, c, b/lambda, a; bc).
    CHECK(rd("bc") == a.basis("e"));
    CHECK(rd("a") == a.basis("d"));
    CHECK(rd("b") == a.basis("c"));
    CHECK(rd("c") == a.basis("b").scaled(fe("1/2")));
    CHECK(rd("d") == a.basis("a"));
    CHECK(rd("e") == a.basis("bc"));

    // Left dual table (1; d, c/lambda, b, a; bc).
    CHECK(ld("bc") == a.basis("e"));
    CHECK(ld("a") == a.basis("d"));
    CHECK(ld("b") == a.basis("c").scaled(fe("1/2")));
    CHECK(ld("c") == a.basis("b"));
    CHECK(ld("d") == a.basis("a"));
    CHECK(ld("e") == a.basis("bc"));

    // Nakayama map: fixes e, a, d, bc; scales b by lambda and c by 1/lambda.
    CHECK(dd.nakayama.apply(a.basis("b")) == a.basis("b").scaled(fe("2")));
    CHECK(dd.nakayama.apply(a.basis("c")) == a.basis("c").scaled(fe("1/2")));
    CHECK(dd.nakayama.apply(a.basis("a")) == a.basis("a"));
    CHECK(is_automorphism(a, dd.nakayama));

    // Matrix of alpha in the right-dual basis, ordered as displayed
    // (dual of bc, of a, of b, of c, of d, of e): diag(1, 1, 1/2, 2, 1, 1).
    Matrix p(Q, 6, 6);
    const char* order[] = {"bc", "a", "b", "c", "d", "e"};
    for (std::size_t j = 0; j < 6; ++j) {
        const Element dj = rd(order[j]);
        for (std::size_t i = 0; i < 6; ++i) p.at(i, j) = dj[i];
    }
    const Matrix alpha_in_dual = p.inverse() * dd.nakayama.matrix() * p;
    Matrix expect = Matrix::identity(Q, 6);
    expect.at(2, 2) = fe("1/2");
    expect.at(3, 3) = fe("2");
    CHECK(alpha_in_dual == expect);

    // Squaring: diag(1, 1, 1/4, 4, 1, 1) in the same ordering.
    const Matrix alpha2 = p.inverse() * dd.nakayama.power(2).matrix() * p;
    Matrix expect2 = Matrix::identity(Q, 6);
    expect2.at(2, 2) = fe("1/4");
    expect2.at(3, 3) = fe("4");
    CHECK(alpha2 == expect2);
}

TEST_CASE("group algebra of Z/2 with the identity-coefficient trace is symmetric") {
    const Algebra a = z2_group_algebra(Q);
    CHECK(a.verify().empty());
    TraceForm t{Vec{fe("1"), fe("0")}};
    const DualData dd = dual_bases(a, t);
    CHECK(dd.right_duals == dd.left_duals);
    CHECK(dd.nakayama.is_identity());
    CHECK(is_symmetric(dd));
    CHECK(nakayama_order(dd, 10) == 1);
}

TEST_CASE("symmetry verdicts across parameter choices") {
    const Fixture nn12 = fixtures::nakayama_nesbitt(Q, fe("1"), fe("2"));
    CHECK_FALSE(is_symmetric(dual_bases(nn12.algebra, nn12.trace)));

    const Fixture nn11 = fixtures::nakayama_nesbitt(Q, fe("1"), fe("1"));
    const DualData dd11 = dual_bases(nn11.algebra, nn11.trace);
    CHECK(is_symmetric(dd11));
    CHECK(dd11.right_duals == dd11.left_duals);

    const Fixture e43 = fixtures::local_e43(Q, fe("2"));
    CHECK_FALSE(is_symmetric(dual_bases(e43.algebra, e43.trace)));
}

TEST_CASE("order of the Nakayama automorphism") {
    const Fixture e43q = fixtures::local_e43(Q, fe("2"));
    CHECK_FALSE(nakayama_order(dual_bases(e43q.algebra, e43q.trace), 100).has_value());

    const Field f3 = Field::prime(3);
    const Fixture e43f3 = fixtures::local_e43(f3, FieldElement(f3, 2));  // 2 = -1 in F_3
    CHECK(nakayama_order(dual_bases(e43f3.algebra, e43f3.trace), 100) == 2);
}

TEST_CASE("dual-basis expansion identities hold on fixtures and fail when faulted") {
    for (const auto& fx :
         {fixtures::local_e43(Q, fe("2")), fixtures::nakayama_nesbitt(Q, fe("1"), fe("2"))}) {
        const DualData dd = dual_bases(fx.algebra, fx.trace);
        CHECK(verify_lemma_2_3(fx.algebra, dd).ok());
    }

    const Fixture fx = fixtures::local_e43(Q, fe("2"));
    DualData dd = dual_bases(fx.algebra, fx.trace);
    dd.right_duals.at(fx.algebra.index("c"), fx.algebra.index("b")) = fe("7");  // corrupt d_b
    const CheckReport rep = verify_lemma_2_3(fx.algebra, dd);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().check == "lemma-2.3.1");
}

TEST_CASE("parameter constraints are enforced at binding time") {
    CHECK_THROWS_AS(fixtures::local_e43(Q, fe("0")), FrobcellError);
    CHECK_THROWS_AS(fixtures::local_e43(Q, fe("1")), FrobcellError);
    CHECK_THROWS_AS(fixtures::nakayama_nesbitt(Q, fe("0"), fe("1")), FrobcellError);
    CHECK_NOTHROW(fixtures::local_e43(Q, fe("-1")));
}
