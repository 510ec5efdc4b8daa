#pragma once

// Built-in fixtures. Each bundle carries the algebra, its trace, a candidate
// cell structure, the parameter bindings used, and a provenance note saying
// which numbers were computed by the presentation builder and which were
// declared directly.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobcell/cell_checks.hpp"
#include "frobcell/quiver.hpp"

namespace frobcell {

struct ParamSpec {
    std::string name;
    FieldElement value;
    std::vector<std::string> forbidden;  // canonical scalar strings
};

struct Fixture {
    std::string name;
    Algebra algebra;
    TraceForm trace;
    std::optional<CellDatum> cell;
    std::optional<QuiverPresentation> presentation;
    std::size_t max_degree = 8;
    std::vector<ParamSpec> params;
    std::string provenance;
};

inline void check_param(const ParamSpec& p) {
    for (const auto& bad : p.forbidden)
        if (p.value == FieldElement::parse(p.value.field(), bad))
            throw FrobcellError("parameter '" + p.name + "' must not equal " + bad);
}

namespace fixtures {

// 4-dimensional subalgebra of the 4x4 matrices spanned by
//   C1 = E14, C2 = E13 + u E24, C3 = E12 + v E34, C4 = identity;
// the table is derived here by brute-force matrix-unit arithmetic.
inline Fixture nakayama_nesbitt(const Field& f, const FieldElement& u, const FieldElement& v) {
    check_param({"u", u, {"0"}});
    check_param({"v", v, {"0"}});

    std::vector<Matrix> basis;
    {
        Matrix c1(f, 4, 4);
        c1.at(0, 3) = FieldElement::one(f);  // E14
        Matrix c2(f, 4, 4);
        c2.at(0, 2) = FieldElement::one(f);  // E13 + u E24
        c2.at(1, 3) = u;
        Matrix c3(f, 4, 4);
        c3.at(0, 1) = FieldElement::one(f);  // E12 + v E34
        c3.at(2, 3) = v;
        basis = {c1, c2, c3, Matrix::identity(f, 4)};
    }

    // Express products in the span: flatten the basis into columns and solve.
    Matrix flat(f, 16, 4);
    for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) flat.at(i * 4 + j, b) = basis[b].at(i, j);
    SparseTable table;
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
            const Matrix prod = basis[x] * basis[y];
            Matrix rhs(f, 16, 1);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) rhs.at(i * 4 + j, 0) = prod.at(i, j);
            const Matrix coeffs = flat.solve(rhs);
            std::vector<ProductTerm> terms;
            for (std::size_t k = 0; k < 4; ++k)
                if (!coeffs.at(k, 0).is_zero()) terms.push_back({k, coeffs.at(k, 0)});
            if (!terms.empty()) table[{x, y}] = std::move(terms);
        }

    Vec unit(4, FieldElement::zero(f));
    unit[3] = FieldElement::one(f);
    Algebra a(f, {"C1", "C2", "C3", "C4"}, std::move(table), unit);

    Vec tau(4, FieldElement::zero(f));
    tau[0] = FieldElement::one(f);  // coefficient of C1

    CellDatum cd;
    cd.poset = Poset({"c1", "c2", "c3", "c4"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    for (std::size_t k = 0; k < 4; ++k)
        cd.parts.push_back(CellPart{"c" + std::to_string(k + 1), {"1"}, {{k}}});

    Fixture fx{"nakayama-nesbitt", std::move(a), TraceForm{tau}, cd, std::nullopt, 8,
               {{"u", u, {"0"}}, {"v", v, {"0"}}},
               "table: derived from 4x4 matrix-unit products of the spanning matrices\n"
               "trace: declared (coefficient of C1; nondegenerate iff u*v != 0)\n"
               "cell: declared (four singleton cells, order c1 < {c2, c3} < c4)\n"};
    return fx;
}

inline QuiverPresentation local_e43_presentation(const Field& f, const FieldElement& lambda) {
    QuiverPresentation p;
    p.field = f;
    p.vertices = {"e"};
    // Declaration order steers the reduction pivots so that of the
    // equivalent degree-2 words {bc, cb, ad, da} it is "bc" that survives.
    p.arrows = {{"b", 0, 0}, {"c", 0, 0}, {"a", 0, 0}, {"d", 0, 0}};
    const std::size_t B = 0, C = 1, A = 2, D = 3;
    const FieldElement one = FieldElement::one(f);
    auto word = [&](std::vector<std::size_t> w, FieldElement c) {
        return RelationTerm{PathMono{0, std::move(w)}, std::move(c)};
    };
    auto single = [&](std::vector<std::size_t> w) { return Relation{word(std::move(w), one)}; };
    p.relations = {
        single({A, A}), single({B, B}), single({C, C}), single({D, D}),
        single({A, B}), single({A, C}), single({B, A}), single({B, D}),
        single({C, A}), single({C, D}), single({D, B}), single({D, C}),
        Relation{word({C, B}, one), word({B, C}, -lambda)},
        Relation{word({A, D}, one), word({B, C}, -one)},
        Relation{word({D, A}, one), word({B, C}, -one)},
    };
    p.composition = Composition::LeftToRight;
    return p;
}

// 6-dimensional local quotient of the free algebra on a, b, c, d.
inline Fixture local_e43(const Field& f, const FieldElement& lambda) {
    check_param({"lambda", lambda, {"0", "1"}});
    QuiverPresentation p = local_e43_presentation(f, lambda);
    BuildResult br = build_algebra(p, 3);

    Vec tau(br.algebra.dim(), FieldElement::zero(f));
    tau[br.algebra.index("bc")] = FieldElement::one(f);

    CellDatum cd;
    cd.poset = Poset({"p1", "p2", "p3"}, {{0, 1}, {1, 2}});
    cd.parts.push_back(CellPart{"p1", {"1"}, {{br.algebra.index("bc")}}});
    cd.parts.push_back(CellPart{
        "p2",
        {"1", "2"},
        {{br.algebra.index("a"), br.algebra.index("b")},
         {br.algebra.index("c"), br.algebra.index("d")}}});
    cd.parts.push_back(CellPart{"p3", {"1"}, {{br.algebra.index("e")}}});

    Fixture fx{"local-e43", std::move(br.algebra), TraceForm{tau}, cd, p, 3,
               {{"lambda", lambda, {"0", "1"}}},
               "table: computed by the presentation builder (15 relations, cutoff degree 3)\n"
               "composition: left-to-right (written juxtaposition 'xy' is traverse x, then y)\n"
               "trace: declared (1 on bc, 0 elsewhere)\n"
               "cell: declared; grid rows/columns follow the displayed 2x2 block (a b / c d),\n"
               "  order p1 < p2 < p3; the involution is the grid transpose (fixes a and d,\n"
               "  swaps b and c)\n"
               "dual tables: the dual shown at grid slot (S,T) is the one paired with\n"
               "  C_{S,T} under the trace, i.e. the cellular d_{T,S}\n"};
    return fx;
}

inline QuiverPresentation quiver_e42_presentation(const Field& f) {
    QuiverPresentation p;
    p.field = f;
    p.vertices = {"e0", "e1", "e2", "e3"};
    p.arrows = {{"a1", 1, 0}, {"a2", 2, 0}, {"a3", 3, 0},
                {"b1", 0, 1}, {"b2", 0, 2}, {"b3", 0, 3}};
    const std::size_t A1 = 0, A2 = 1, A3 = 2, B1 = 3, B2 = 4, B3 = 5;
    const FieldElement one = FieldElement::one(f);
    auto word = [&](std::vector<std::size_t> w, FieldElement c) {
        return RelationTerm{PathMono{0, std::move(w)}, std::move(c)};
    };
    auto single = [&](std::vector<std::size_t> w) { return Relation{word(std::move(w), one)}; };
    p.relations = {
        single({A1, B1}), single({A1, B2}), single({A2, B1}),
        single({A2, B3}), single({A3, B2}), single({A3, B3}),
        Relation{word({B1, A1}, one), word({B2, A2}, -one)},
        Relation{word({B2, A2}, one), word({B3, A3}, -one)},
    };
    p.composition = Composition::LeftToRight;
    return p;
}

// 14-dimensional path-algebra quotient on the 4-vertex star quiver.
inline Fixture quiver_e42(const Field& f) {
    QuiverPresentation p = quiver_e42_presentation(f);
    BuildResult br = build_algebra(p, 3);
    Algebra& a = br.algebra;

    Vec tau(a.dim(), FieldElement::zero(f));
    for (const char* lbl : {"a1b3", "a3b1", "a2b2", "b1a1"})
        tau[a.index(lbl)] = FieldElement::one(f);

    CellDatum cd;
    // The only block order whose lower spans are two-sided ideals is
    // c3 < c2 < c1; recorded here explicitly.
    cd.poset = Poset({"c1", "c2", "c3"}, {{2, 1}, {1, 0}});
    cd.parts.push_back(CellPart{"c1",
                                {"1", "2"},
                                {{a.index("e3"), a.index("a3")},
                                 {a.index("b3"), a.index("e0")}}});
    cd.parts.push_back(CellPart{"c2",
                                {"1", "2", "3"},
                                {{a.index("e1"), a.index("a1"), a.index("a1b3")},
                                 {a.index("b1"), a.index("b1a1"), a.index("b2")},
                                 {a.index("a3b1"), a.index("a2"), a.index("e2")}}});
    cd.parts.push_back(CellPart{"c3", {"1"}, {{a.index("a2b2")}}});

    Fixture fx{"quiver-e42", std::move(br.algebra), TraceForm{tau}, cd, p, 3, {},
               "table: computed by the presentation builder (8 relations, cutoff degree 3)\n"
               "composition: left-to-right; the relation words only compose under this\n"
               "  convention, which fixes it\n"
               "trace: declared (1 on a1b3, a3b1, a2b2, b1a1; 0 elsewhere)\n"
               "cell: declared candidate blocks 2x2 / 3x3 / 1x1 with the grid transpose\n"
               "  involution; the hinted order c3 < c2 < c1 is the only one whose lower\n"
               "  spans are two-sided ideals (use verify to see the axiom outcome)\n"
               "dual tables: slot (S,T) shows the dual paired with C_{S,T} = cellular d_{T,S}\n"};
    return fx;
}

}  // namespace fixtures

inline Fixture make_fixture(const std::string& name, const Field& f,
                            const std::map<std::string, std::string>& bindings) {
    auto bound = [&](const char* pname, const char* dflt) {
        auto it = bindings.find(pname);
        return FieldElement::parse(f, it == bindings.end() ? dflt : it->second);
    };
    if (name == "nakayama-nesbitt")
        return fixtures::nakayama_nesbitt(f, bound("u", "1"), bound("v", "2"));
    if (name == "local-e43") return fixtures::local_e43(f, bound("lambda", "2"));
    if (name == "quiver-e42") return fixtures::quiver_e42(f);
    throw FrobcellError("unknown fixture '" + name +
                        "' (expected nakayama-nesbitt, quiver-e42 or local-e43)");
}

}  // namespace frobcell
