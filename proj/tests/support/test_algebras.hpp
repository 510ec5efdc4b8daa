#pragma once

// Small cellular Frobenius algebras used across the test suites: full matrix
// algebras with twisted traces, truncated polynomial algebras, the library
// fixtures, and direct sums of any of these. Every generator yields a valid
// cell datum by construction; traces are whatever the caller supplies.

#include <random>
#include <string>
#include <vector>

#include "frobcell/fixtures.hpp"
#include "frobcell/frobenius.hpp"

namespace testsupport {

using namespace frobcell;

struct CellFixture {
    std::string name;
    Algebra algebra;
    TraceForm trace;
    CellDatum cell;
};

// M_k(F) on the matrix-unit basis, one cell, transpose involution, trace
// x -> tr(u x) for an invertible twist u.
inline CellFixture matrix_algebra(const Field& f, std::size_t k, const Matrix& u) {
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t)
            labels.push_back("E" + std::to_string(s + 1) + std::to_string(t + 1));
    auto idx = [&](std::size_t s, std::size_t t) { return s * k + t; };

    SparseTable table;
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t x = 0; x < k; ++x)
                for (std::size_t y = 0; y < k; ++y)
                    if (t == x) table[{idx(s, t), idx(x, y)}] = {{idx(s, y), FieldElement::one(f)}};
    Vec unit(k * k, FieldElement::zero(f));
    for (std::size_t s = 0; s < k; ++s) unit[idx(s, s)] = FieldElement::one(f);
    Algebra a(f, labels, std::move(table), unit);

    Vec tau(k * k, FieldElement::zero(f));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) tau[idx(s, t)] = u.at(t, s);  // tr(u E_st)

    CellDatum cd;
    cd.poset = Poset({"m"}, {});
    CellPart part;
    part.lambda = "m";
    for (std::size_t s = 0; s < k; ++s) part.tableaux.push_back(std::to_string(s + 1));
    part.grid.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) part.grid[s][t] = idx(s, t);
    cd.parts.push_back(std::move(part));

    return {"M" + std::to_string(k), std::move(a), TraceForm{tau}, std::move(cd)};
}

// F[x]/(x^n) with singleton cells ordered by descending power (the socle
// power is the smallest cell). Nondegenerate iff tau(x^{n-1}) != 0.
inline CellFixture truncated_poly(const Field& f, std::size_t n, Vec tau) {
    std::vector<std::string> labels;
    labels.push_back("1");
    for (std::size_t i = 1; i < n; ++i) labels.push_back("x" + std::to_string(i));
    SparseTable table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) table[{i, j}] = {{i + j, FieldElement::one(f)}};
    Vec unit(n, FieldElement::zero(f));
    unit[0] = FieldElement::one(f);
    Algebra a(f, labels, std::move(table), unit);

    CellDatum cd;
    std::vector<std::string> elems;
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (std::size_t i = 0; i < n; ++i) elems.push_back("p" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) less.emplace_back(i + 1, i);  // x^{k+1} below x^k
    cd.poset = Poset(elems, less);
    for (std::size_t i = 0; i < n; ++i)
        cd.parts.push_back(CellPart{"p" + std::to_string(i), {"1"}, {{i}}});

    return {"K[x]/x^" + std::to_string(n), std::move(a), TraceForm{std::move(tau)}, std::move(cd)};
}

inline CellFixture direct_sum(const CellFixture& l, const CellFixture& r) {
    const Field& f = l.algebra.field();
    if (f != r.algebra.field()) throw FrobcellError("direct_sum: field mismatch");
    const std::size_t nl = l.algebra.dim(), nr = r.algebra.dim();
    std::vector<std::string> labels;
    for (const auto& s : l.algebra.labels()) labels.push_back("l:" + s);
    for (const auto& s : r.algebra.labels()) labels.push_back("r:" + s);

    SparseTable table;
    for (const auto& [key, terms] : l.algebra.table()) table[key] = terms;
    for (const auto& [key, terms] : r.algebra.table()) {
        std::vector<ProductTerm> shifted;
        for (const auto& t : terms) shifted.push_back({t.k + nl, t.coeff});
        table[{key.first + nl, key.second + nl}] = std::move(shifted);
    }
    Vec unit(nl + nr, FieldElement::zero(f));
    for (std::size_t i = 0; i < nl; ++i) unit[i] = l.algebra.unit()[i];
    for (std::size_t i = 0; i < nr; ++i) unit[nl + i] = r.algebra.unit()[i];
    Algebra a(f, labels, std::move(table), unit);

    Vec tau(nl + nr, FieldElement::zero(f));
    for (std::size_t i = 0; i < nl; ++i) tau[i] = l.trace.tau[i];
    for (std::size_t i = 0; i < nr; ++i) tau[nl + i] = r.trace.tau[i];

    CellDatum cd;
    std::vector<std::string> elems;
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (const auto& e : l.cell.poset.elements()) elems.push_back("l:" + e);
    for (const auto& e : r.cell.poset.elements()) elems.push_back("r:" + e);
    for (const auto& [x, y] : l.cell.poset.pairs()) less.emplace_back(x, y);
    const std::size_t pl = l.cell.poset.size();
    for (const auto& [x, y] : r.cell.poset.pairs()) less.emplace_back(pl + x, pl + y);
    cd.poset = Poset(elems, less);
    for (const auto& part : l.cell.parts) {
        CellPart p = part;
        p.lambda = "l:" + p.lambda;
        cd.parts.push_back(std::move(p));
    }
    for (const auto& part : r.cell.parts) {
        CellPart p;
        p.lambda = "r:" + part.lambda;
        p.tableaux = part.tableaux;
        for (const auto& row : part.grid) {
            std::vector<std::size_t> nrow;
            for (auto b : row) nrow.push_back(b + nl);
            p.grid.push_back(std::move(nrow));
        }
        cd.parts.push_back(std::move(p));
    }
    if (!l.cell.grid_transpose_involution || !r.cell.grid_transpose_involution)
        throw FrobcellError("direct_sum supports grid-transpose involutions only");

    return {l.name + " + " + r.name, std::move(a), TraceForm{std::move(tau)}, std::move(cd)};
}

inline CellFixture from_fixture(const Fixture& fx) {
    if (!fx.cell) throw FrobcellError("fixture has no cell datum");
    return {fx.name, fx.algebra, fx.trace, *fx.cell};
}

inline FieldElement random_scalar(const Field& f, std::mt19937_64& rng, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    return FieldElement(f, d(rng));
}

inline Matrix random_invertible(const Field& f, std::size_t k, std::mt19937_64& rng) {
    for (int tries = 0; tries < 200; ++tries) {
        Matrix m(f, k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m.at(i, j) = random_scalar(f, rng);
        if (m.rank() == k) return m;
    }
    throw FrobcellError("could not sample an invertible matrix");
}

// Random trace on a fixed algebra, retried until the Gram matrix is regular.
inline TraceForm random_nondegenerate_trace(const Algebra& a, std::mt19937_64& rng) {
    for (int tries = 0; tries < 300; ++tries) {
        Vec tau(a.dim(), FieldElement::zero(a.field()));
        for (auto& x : tau) x = random_scalar(a.field(), rng);
        const TraceForm t{tau};
        if (gram(a, t).rank() == a.dim()) return t;
    }
    throw FrobcellError("could not sample a nondegenerate trace");
}

}  // namespace testsupport
