#pragma once

// Cell data in the Graham-Lehrer sense: a poset of cells, an index grid per
// cell, and an involution. Verification extracts the structure-constant
// families (C3 coefficients and the bilinear coefficients Phi), re-indexes
// dual bases by cell labels, and checks the full battery of dual-basis
// identities.
//
// Index conventions, fixed here and verified against the delta-conditions:
//   grid[S][T] is the algebra basis index of C_{S,T};
//   the cellular right dual d_{U,V} is the plain right dual of C_{V,U}, so
//   the dual "paired with" C_{S,T} (the one displayed at grid slot (S,T)) is
//   d_{T,S}; same for left duals D.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frobcell/centers.hpp"

namespace frobcell {

class Poset {
public:
    Poset() = default;

    // `less` pairs are covering relations or any generating set; the strict
    // order stored is the transitive closure, validated irreflexive.
    Poset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& less)
        : elements_(std::move(elements)), lt_(elements_.size(), std::vector<bool>(elements_.size(), false)) {
        for (const auto& [a, b] : less) {
            if (a >= size() || b >= size()) throw FrobcellError("poset relation out of range");
            lt_[a][b] = true;
        }
        for (std::size_t k = 0; k < size(); ++k)
            for (std::size_t i = 0; i < size(); ++i)
                for (std::size_t j = 0; j < size(); ++j)
                    if (lt_[i][k] && lt_[k][j]) lt_[i][j] = true;
        for (std::size_t i = 0; i < size(); ++i)
            if (lt_[i][i])
                throw FrobcellError("poset order is not irreflexive (cycle through '" +
                                    elements_[i] + "')");
    }

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(std::size_t i) const { return elements_[i]; }

    std::size_t index(const std::string& name) const {
        for (std::size_t i = 0; i < size(); ++i)
            if (elements_[i] == name) return i;
        throw FrobcellError("unknown poset element '" + name + "'");
    }

    bool lt(std::size_t a, std::size_t b) const { return lt_[a][b]; }
    bool leq(std::size_t a, std::size_t b) const { return a == b || lt_[a][b]; }

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (lt_[i][j]) out.emplace_back(i, j);
        return out;
    }

    Poset opposite() const {
        std::vector<std::pair<std::size_t, std::size_t>> rev;
        for (const auto& [a, b] : pairs()) rev.emplace_back(b, a);
        return Poset(elements_, rev);
    }

    // All total orders refining this one, as permutations small-to-large.
    std::vector<std::vector<std::size_t>> linear_extensions() const {
        std::vector<std::size_t> perm(size());
        for (std::size_t i = 0; i < size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end());
        std::vector<std::vector<std::size_t>> out;
        do {
            bool ok = true;
            std::vector<std::size_t> pos(size());
            for (std::size_t i = 0; i < size(); ++i) pos[perm[i]] = i;
            for (const auto& [a, b] : pairs())
                if (pos[a] > pos[b]) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }

    static Poset chain(const std::vector<std::string>& elements,
                       const std::vector<std::size_t>& small_to_large) {
        std::vector<std::pair<std::size_t, std::size_t>> less;
        for (std::size_t i = 0; i + 1 < small_to_large.size(); ++i)
            less.emplace_back(small_to_large[i], small_to_large[i + 1]);
        return Poset(elements, less);
    }

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> lt_;
};

struct CellPart {
    std::string lambda;
    std::vector<std::string> tableaux;            // M(lambda) labels, ordered
    std::vector<std::vector<std::size_t>> grid;   // grid[S][T] = basis index of C_{S,T}
};

struct CellDatum {
    Poset poset;
    std::vector<CellPart> parts;  // parts[p].lambda == poset.name(p)
    bool grid_transpose_involution = true;
    std::optional<Matrix> involution;  // used when grid_transpose_involution is false

    std::size_t cidx(std::size_t part, std::size_t s, std::size_t t) const {
        return parts[part].grid[s][t];
    }
};

struct CellLoc {
    std::size_t part, s, t;
};

// Basis-index <-> (part, S, T) bijection; fails with C1 violations if the
// grids do not tile the basis.
class CellIndex {
public:
    static std::optional<CellIndex> build(const Algebra& a, const CellDatum& cd, CheckReport& rep) {
        CellIndex ix;
        ix.loc_.assign(a.dim(), CellLoc{0, 0, 0});
        std::vector<bool> seen(a.dim(), false);
        if (cd.parts.size() != cd.poset.size()) {
            rep.add("axiom-C1", "part count differs from poset size");
            return std::nullopt;
        }
        std::size_t total = 0;
        for (std::size_t p = 0; p < cd.parts.size(); ++p) {
            const CellPart& part = cd.parts[p];
            if (part.lambda != cd.poset.name(p)) {
                rep.add("axiom-C1", "part '" + part.lambda + "' misaligned with poset order");
                return std::nullopt;
            }
            const std::size_t m = part.tableaux.size();
            total += m * m;
            if (part.grid.size() != m) {
                rep.add("axiom-C1", "grid of '" + part.lambda + "' is not " + std::to_string(m) +
                                        " rows");
                return std::nullopt;
            }
            for (std::size_t s = 0; s < m; ++s) {
                if (part.grid[s].size() != m) {
                    rep.add("axiom-C1", "grid of '" + part.lambda + "' is ragged");
                    return std::nullopt;
                }
                for (std::size_t t = 0; t < m; ++t) {
                    const std::size_t b = part.grid[s][t];
                    if (b >= a.dim() || seen[b]) {
                        rep.add("axiom-C1", "grid entry of '" + part.lambda +
                                                "' is out of range or repeated");
                        return std::nullopt;
                    }
                    seen[b] = true;
                    ix.loc_[b] = CellLoc{p, s, t};
                }
            }
        }
        if (total != a.dim()) {
            rep.add("axiom-C1", "sum of |M(lambda)|^2 is " + std::to_string(total) + ", dim is " +
                                    std::to_string(a.dim()));
            return std::nullopt;
        }
        return ix;
    }

    const CellLoc& loc(std::size_t basis) const { return loc_[basis]; }

    // Basis index of C_{T,S} for the cell slot of basis index i = C_{S,T}.
    std::size_t transpose(const CellDatum& cd, std::size_t i) const {
        const CellLoc& l = loc_[i];
        return cd.parts[l.part].grid[l.t][l.s];
    }

private:
    std::vector<CellLoc> loc_;
};

inline LinearMap involution_map(const Algebra& a, const CellDatum& cd, const CellIndex& ix) {
    if (!cd.grid_transpose_involution) {
        if (!cd.involution) throw FrobcellError("cell datum is missing its involution matrix");
        return LinearMap(*cd.involution);
    }
    Matrix m(a.field(), a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) m.at(ix.transpose(cd, j), j) = FieldElement::one(a.field());
    return LinearMap(m);
}

struct CellConstants {
    bool valid = false;
    CheckReport report;
    std::optional<CellIndex> index;
    std::optional<LinearMap> involution;
    // r[a][part].at(S', S) is the C3 coefficient of a acting on column S.
    std::vector<std::vector<Matrix>> r;
    std::vector<Matrix> phi;  // per part

    std::vector<std::size_t> lambda_zero() const {
        std::vector<std::size_t> out;
        for (std::size_t p = 0; p < phi.size(); ++p)
            if (!phi[p].is_zero()) out.push_back(p);
        return out;
    }

    // r extended linearly to an arbitrary element.
    Matrix r_of(const Algebra& a, std::size_t part, const Element& x) const {
        Matrix m(a.field(), r.front()[part].rows(), r.front()[part].cols());
        for (std::size_t b = 0; b < a.dim(); ++b) {
            if (x[b].is_zero()) continue;
            const Matrix& rb = r[b][part];
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m.at(i, j) += x[b] * rb.at(i, j);
        }
        return m;
    }
};

// Axioms C1-C3 plus the C3' cross-check, the cell-chain ideal property, and
// the extraction of the r and Phi coefficient families.
inline CellConstants verify_cell_datum(const Algebra& a, const CellDatum& cd) {
    CellConstants out;
    CheckReport& rep = out.report;

    out.index = CellIndex::build(a, cd, rep);
    if (!out.index) return out;
    const CellIndex& ix = *out.index;

    const LinearMap inv = involution_map(a, cd, ix);
    out.involution = inv;

    // C2: involutive, grid-compatible, anti-automorphism.
    if (!inv.compose(inv).is_identity()) rep.add("axiom-C2", "i^2 != id");
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const Element img = inv.apply(a.basis(j));
        if (img != a.basis(ix.transpose(cd, j))) {
            const CellLoc& l = ix.loc(j);
            rep.add("axiom-C2", "i(C_{" + cd.parts[l.part].tableaux[l.s] + "," +
                                    cd.parts[l.part].tableaux[l.t] + "}^" + cd.parts[l.part].lambda +
                                    ") = " + a.format_element(img) + " != " +
                                    a.label(ix.transpose(cd, j)));
        }
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Element lhs = inv.apply(a.multiply_basis(i, j));
            const Element rhs = a.multiply(inv.apply(a.basis(j)), inv.apply(a.basis(i)));
            if (lhs != rhs) {
                rep.add("axiom-C2", "i(" + a.label(i) + "*" + a.label(j) + ") != i(" + a.label(j) +
                                        ")*i(" + a.label(i) + ")");
            }
        }

    // C3: left action is column-preserving modulo lower cells, with
    // coefficients r_a(S',S) independent of the column T.
    const std::size_t nparts = cd.parts.size();
    out.r.assign(a.dim(), {});
    bool c3_ok = true;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        out.r[b].reserve(nparts);
        for (std::size_t p = 0; p < nparts; ++p) {
            const std::size_t m = cd.parts[p].tableaux.size();
            Matrix rmat(a.field(), m, m);
            std::vector<std::vector<bool>> set(m, std::vector<bool>(m, false));
            for (std::size_t t = 0; t < m; ++t)
                for (std::size_t s = 0; s < m; ++s) {
                    const Element prod = a.multiply(a.basis(b), a.basis(cd.cidx(p, s, t)));
                    Vec col(m, FieldElement::zero(a.field()));
                    for (std::size_t k = 0; k < a.dim(); ++k) {
                        if (prod[k].is_zero()) continue;
                        const CellLoc& l = ix.loc(k);
                        if (l.part == p) {
                            if (l.t != t) {
                                rep.add("axiom-C3",
                                        a.label(b) + " * C_{" + cd.parts[p].tableaux[s] + "," +
                                            cd.parts[p].tableaux[t] + "}^" + cd.parts[p].lambda +
                                            " leaves column " + cd.parts[p].tableaux[t]);
                                c3_ok = false;
                            } else {
                                col[l.s] = prod[k];
                            }
                        } else if (!cd.poset.lt(l.part, p)) {
                            rep.add("axiom-C3", a.label(b) + " * C_{" + cd.parts[p].tableaux[s] +
                                                    "," + cd.parts[p].tableaux[t] + "}^" +
                                                    cd.parts[p].lambda + " hits non-lower cell '" +
                                                    cd.parts[l.part].lambda + "'");
                            c3_ok = false;
                        }
                    }
                    for (std::size_t sp = 0; sp < m; ++sp) {
                        if (!set[sp][s]) {
                            rmat.at(sp, s) = col[sp];
                            set[sp][s] = true;
                        } else if (rmat.at(sp, s) != col[sp]) {
                            rep.add("axiom-C3", "r_" + a.label(b) + "(" + cd.parts[p].tableaux[sp] +
                                                    "," + cd.parts[p].tableaux[s] + ") on '" +
                                                    cd.parts[p].lambda + "' depends on T: " +
                                                    rmat.at(sp, s).to_string() + " vs " +
                                                    col[sp].to_string() + " at T=" +
                                                    cd.parts[p].tableaux[t]);
                            c3_ok = false;
                        }
                    }
                }
            out.r[b].push_back(std::move(rmat));
        }
    }

    // C3': apply i to C3. Checked directly as a congruence mod lower cells.
    if (c3_ok) {
        for (std::size_t b = 0; b < a.dim(); ++b)
            for (std::size_t p = 0; p < nparts; ++p) {
                const std::size_t m = cd.parts[p].tableaux.size();
                for (std::size_t s = 0; s < m; ++s)
                    for (std::size_t t = 0; t < m; ++t) {
                        Element lhs =
                            a.multiply(a.basis(cd.cidx(p, t, s)), inv.apply(a.basis(b)));
                        for (std::size_t sp = 0; sp < m; ++sp) {
                            const FieldElement c = out.r[b][p].at(sp, s);
                            if (!c.is_zero())
                                lhs = lhs - a.basis(cd.cidx(p, t, sp)).scaled(c);
                        }
                        for (std::size_t k = 0; k < a.dim(); ++k)
                            if (!lhs[k].is_zero() && !cd.poset.lt(ix.loc(k).part, p)) {
                                rep.add("axiom-C3p", "C_{" + cd.parts[p].tableaux[t] + "," +
                                                         cd.parts[p].tableaux[s] + "}^" +
                                                         cd.parts[p].lambda + " * i(" + a.label(b) +
                                                         ") breaks the transposed congruence");
                                break;
                            }
                    }
            }
    }

    // Chain property: span{C^mu : mu <= lambda} is a two-sided ideal.
    for (std::size_t p = 0; p < nparts; ++p) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (!cd.poset.leq(ix.loc(k).part, p)) continue;
            for (std::size_t b = 0; b < a.dim() && rep.violations.size() < 256; ++b) {
                for (const Element& prod : {a.multiply_basis(b, k), a.multiply_basis(k, b)}) {
                    for (std::size_t q = 0; q < a.dim(); ++q)
                        if (!prod[q].is_zero() && !cd.poset.leq(ix.loc(q).part, p)) {
                            rep.add("cell-chain", "ideal span{C^mu : mu <= '" +
                                                      cd.parts[p].lambda +
                                                      "'} is not closed (witness " + a.label(b) +
                                                      ", " + a.label(k) + ")");
                            break;
                        }
                }
            }
        }
    }

    // Phi(T,U): the within-cell coefficient of C_{S,T} C_{U,V} mod lower,
    // well-defined independently of S and V.
    for (std::size_t p = 0; p < nparts; ++p) {
        const std::size_t m = cd.parts[p].tableaux.size();
        Matrix phi(a.field(), m, m);
        std::vector<std::vector<bool>> set(m, std::vector<bool>(m, false));
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t)
                for (std::size_t u = 0; u < m; ++u)
                    for (std::size_t v = 0; v < m; ++v) {
                        const Element prod =
                            a.multiply_basis(cd.cidx(p, s, t), cd.cidx(p, u, v));
                        FieldElement val = FieldElement::zero(a.field());
                        bool clean = true;
                        for (std::size_t k = 0; k < a.dim(); ++k) {
                            if (prod[k].is_zero()) continue;
                            const CellLoc& l = ix.loc(k);
                            if (cd.poset.lt(l.part, p)) continue;
                            if (l.part == p && l.s == s && l.t == v) {
                                val = prod[k];
                            } else {
                                clean = false;
                            }
                        }
                        if (!clean) {
                            rep.add("phi", "C_{" + cd.parts[p].tableaux[s] + "," +
                                               cd.parts[p].tableaux[t] + "} C_{" +
                                               cd.parts[p].tableaux[u] + "," +
                                               cd.parts[p].tableaux[v] + "} on '" +
                                               cd.parts[p].lambda +
                                               "' is not a multiple of C_{S,V} mod lower");
                            continue;
                        }
                        if (!set[t][u]) {
                            phi.at(t, u) = val;
                            set[t][u] = true;
                        } else if (phi.at(t, u) != val) {
                            rep.add("phi", "Phi(" + cd.parts[p].tableaux[t] + "," +
                                               cd.parts[p].tableaux[u] + ") on '" +
                                               cd.parts[p].lambda + "' depends on (S,V)");
                        }
                    }
        out.phi.push_back(std::move(phi));
    }

    out.valid = rep.ok();
    return out;
}

// Cellular-indexed dual bases; construction verifies both displayed
// delta-conditions exhaustively.
struct CellularDuals {
    const CellIndex* ix = nullptr;
    Matrix right;  // column j: right dual of basis j
    Matrix left;   // row j: left dual of basis j
    CheckReport delta_report;

    Element d(const CellDatum& cd, std::size_t part, std::size_t u, std::size_t v) const {
        return Element(right.col(cd.cidx(part, v, u)));
    }
    Element D(const CellDatum& cd, std::size_t part, std::size_t u, std::size_t v) const {
        return Element(left.row(cd.cidx(part, v, u)));
    }
};

inline CellularDuals dual_cell_tables(const Algebra& a, const CellDatum& cd, const CellIndex& ix,
                                      const TraceForm& t, const DualData& dd) {
    CellularDuals cduals{&ix, dd.right_duals, dd.left_duals, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const CellLoc& li = ix.loc(i);  // C_{S,T}^lambda
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const CellLoc& lj = ix.loc(j);  // cellular (U,V) slot of part mu
            const Element dj = cduals.d(cd, lj.part, lj.s, lj.t);
            const Element Dj = cduals.D(cd, lj.part, lj.s, lj.t);
            const bool want = li.part == lj.part && li.s == lj.t && li.t == lj.s;
            const FieldElement expect =
                want ? FieldElement::one(a.field()) : FieldElement::zero(a.field());
            if (t(a.multiply(a.basis(i), dj)) != expect)
                cduals.delta_report.add("delta-right",
                                        "tau(C_" + a.label(i) + " d) mismatch at j=" + a.label(j));
            if (t(a.multiply(Dj, a.basis(i))) != expect)
                cduals.delta_report.add("delta-left",
                                        "tau(D C_" + a.label(i) + ") mismatch at j=" + a.label(j));
        }
    }
    return cduals;
}

}  // namespace frobcell
