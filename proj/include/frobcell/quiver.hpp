#pragma once

// Quiver-with-relations presentations, turned into structure-constant algebras
// by bounded-degree linear reduction. Free algebras are one-vertex quivers
// whose loops are the generators.
//
// The builder enumerates path monomials degree by degree, spans the truncated
// two-sided ideal slice generated by the relations, and row-reduces it with
// degree-lexicographic pivoting (largest monomial rewrites into smaller ones).
// It stops at the first degree d where every degree-d monomial is a pivot:
// from then on every longer monomial rewrites into the surviving ones, so the
// non-pivot monomials of degree < d form a spanning monomial basis.

#include <map>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include "frobcell/algebra.hpp"

namespace frobcell {

struct PresentationError : FrobcellError {
    explicit PresentationError(const std::string& msg) : FrobcellError(msg) {}
};
struct NotNilpotentAtBound : PresentationError {
    NotNilpotentAtBound(const std::string& msg, std::string witness_)
        : PresentationError(msg), witness(std::move(witness_)) {}
    std::string witness;  // a monomial at the bound that did not reduce
};
struct InconsistentPresentation : PresentationError {
    explicit InconsistentPresentation(const std::string& msg) : PresentationError(msg) {}
};

enum class Composition { LeftToRight, RightToLeft };

inline std::string to_string(Composition c) {
    return c == Composition::LeftToRight ? "left-to-right" : "right-to-left";
}

struct Arrow {
    std::string name;
    std::size_t src, dst;
};

// A path monomial: arrow index sequence, or a lone vertex when the sequence
// is empty.
struct PathMono {
    std::size_t vertex = 0;  // meaningful only when arrows is empty
    std::vector<std::size_t> arrows;

    std::size_t degree() const { return arrows.size(); }
};

struct RelationTerm {
    PathMono path;
    FieldElement coeff;
};
using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
    Field field;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    Composition composition = Composition::LeftToRight;
};

struct BuildResult {
    Algebra algebra;
    std::vector<std::string> basis_labels;   // human-readable path labels, basis order
    std::vector<std::size_t> basis_degrees;  // path length per basis element
    std::size_t cutoff;                      // degree at which reduction closed
};

namespace qdetail {

struct Endpoints {
    std::size_t src, tgt;
};

inline Endpoints endpoints(const QuiverPresentation& p, const PathMono& m) {
    if (m.arrows.empty()) return {m.vertex, m.vertex};
    if (p.composition == Composition::LeftToRight)
        return {p.arrows[m.arrows.front()].src, p.arrows[m.arrows.back()].dst};
    return {p.arrows[m.arrows.back()].src, p.arrows[m.arrows.front()].dst};
}

// Consecutive-step constraint inside one written sequence.
inline bool sequence_composable(const QuiverPresentation& p, const std::vector<std::size_t>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (p.composition == Composition::LeftToRight) {
            if (p.arrows[seq[i]].dst != p.arrows[seq[i + 1]].src) return false;
        } else {
            if (p.arrows[seq[i]].src != p.arrows[seq[i + 1]].dst) return false;
        }
    }
    return true;
}

// Product x*y is the written juxtaposition "xy" in both conventions.
inline bool product_composable(const QuiverPresentation& p, const PathMono& x, const PathMono& y) {
    const Endpoints ex = endpoints(p, x), ey = endpoints(p, y);
    if (p.composition == Composition::LeftToRight) return ex.tgt == ey.src;
    return ey.tgt == ex.src;
}

}  // namespace qdetail

class PresentationBuilder {
public:
    PresentationBuilder(const QuiverPresentation& p, std::size_t max_degree)
        : p_(p), max_degree_(max_degree), zero_(FieldElement::zero(p.field)) {
        if (max_degree_ < 1) throw PresentationError("max_degree must be at least 1");
        validate();
    }

    BuildResult build() {
        // Degree 0: vertex idempotents.
        for (std::size_t v = 0; v < p_.vertices.size(); ++v)
            add_mono(PathMono{v, {}});
        degree_end_.push_back(monos_.size());
        insert_generators(0);  // relations supported on vertex paths alone

        std::size_t max_rel_deg = 0;
        for (const auto& rel : p_.relations)
            for (const auto& t : rel) max_rel_deg = std::max(max_rel_deg, t.path.degree());

        std::optional<std::size_t> cut;
        for (std::size_t d = 1; d <= max_degree_; ++d) {
            extend_monomials(d);
            insert_generators(d);
            if (d >= max_rel_deg && all_pivots_at(d)) {
                cut = d;
                break;
            }
        }
        if (!cut) {
            std::string witness = first_unreduced(max_degree_);
            throw NotNilpotentAtBound(
                "degree-" + std::to_string(max_degree_) +
                    " slice is not fully reducible; raise max_degree or the quotient is "
                    "infinite-dimensional (unreduced monomial: " + witness + ")",
                witness);
        }
        return assemble(*cut);
    }

private:
    void validate() const {
        for (const auto& a : p_.arrows)
            if (a.src >= p_.vertices.size() || a.dst >= p_.vertices.size())
                throw PresentationError("arrow '" + a.name + "' has an unknown endpoint");
        for (std::size_t r = 0; r < p_.relations.size(); ++r) {
            const auto& rel = p_.relations[r];
            if (rel.empty()) throw PresentationError("empty relation");
            std::optional<qdetail::Endpoints> common;
            for (const auto& t : rel) {
                if (!qdetail::sequence_composable(p_, t.path.arrows))
                    throw PresentationError("relation " + std::to_string(r + 1) +
                                            " contains a non-composable path " + label_of(t.path));
                const auto e = qdetail::endpoints(p_, t.path);
                if (!common) common = e;
                else if (common->src != e.src || common->tgt != e.tgt)
                    throw PresentationError("relation " + std::to_string(r + 1) +
                                            " mixes non-parallel paths");
            }
        }
    }

    std::string label_of(const PathMono& m) const {
        if (m.arrows.empty()) return p_.vertices[m.vertex];
        std::string s;
        for (auto a : m.arrows) s += p_.arrows[a].name;
        return s;
    }

    void add_mono(PathMono m) {
        index_[key(m)] = monos_.size();
        monos_.push_back(std::move(m));
    }

    static std::pair<std::size_t, std::vector<std::size_t>> key(const PathMono& m) {
        if (m.arrows.empty()) return {0, {m.vertex}};
        return {m.arrows.size(), m.arrows};
    }

    std::size_t mono_index(const PathMono& m) const {
        auto it = index_.find(key(m));
        if (it == index_.end()) throw PresentationError("internal: unindexed monomial");
        return it->second;
    }

    void extend_monomials(std::size_t d) {
        const std::size_t lo = d == 1 ? 0 : degree_end_[d - 2];
        const std::size_t hi = degree_end_[d - 1];
        std::vector<PathMono> fresh;
        for (std::size_t i = lo; i < hi; ++i) {
            const PathMono base = monos_[i];
            for (std::size_t a = 0; a < p_.arrows.size(); ++a) {
                if (base.arrows.empty()) {
                    const std::size_t start = p_.composition == Composition::LeftToRight
                                                  ? p_.arrows[a].src
                                                  : p_.arrows[a].dst;
                    if (start != base.vertex) continue;
                } else {
                    const auto& last = p_.arrows[base.arrows.back()];
                    const auto& next = p_.arrows[a];
                    if (p_.composition == Composition::LeftToRight) {
                        if (last.dst != next.src) continue;
                    } else {
                        if (last.src != next.dst) continue;
                    }
                }
                PathMono m = base;
                m.arrows.push_back(a);
                fresh.push_back(std::move(m));
            }
        }
        std::sort(fresh.begin(), fresh.end(),
                  [](const PathMono& x, const PathMono& y) { return x.arrows < y.arrows; });
        for (auto& m : fresh) add_mono(std::move(m));
        degree_end_.push_back(monos_.size());
    }

    // All p * rel * q multiples whose degree bound lands exactly at d.
    void insert_generators(std::size_t d) {
        for (const auto& rel : p_.relations) {
            std::size_t maxdeg = 0;
            for (const auto& t : rel) maxdeg = std::max(maxdeg, t.path.degree());
            if (maxdeg > d) continue;
            const auto re = qdetail::endpoints(p_, rel.front().path);
            const std::size_t budget = d - maxdeg;
            for (std::size_t pi = 0; pi < degree_end_[budget]; ++pi) {
                const PathMono& left = monos_[pi];
                const auto le = qdetail::endpoints(p_, left);
                const bool left_ok = p_.composition == Composition::LeftToRight
                                         ? le.tgt == re.src
                                         : re.tgt == le.src;
                if (!left_ok) continue;
                const std::size_t qbudget = budget - left.degree();
                for (std::size_t qi = 0; qi < degree_end_[qbudget]; ++qi) {
                    const PathMono& right = monos_[qi];
                    if (left.degree() + maxdeg + right.degree() != d) continue;  // added earlier
                    const auto qe = qdetail::endpoints(p_, right);
                    const bool right_ok = p_.composition == Composition::LeftToRight
                                              ? re.tgt == qe.src
                                              : qe.tgt == re.src;
                    if (!right_ok) continue;
                    Vec gen(monos_.size(), zero_);
                    for (const auto& t : rel) {
                        PathMono full;
                        full.arrows = left.arrows;
                        full.arrows.insert(full.arrows.end(), t.path.arrows.begin(),
                                           t.path.arrows.end());
                        full.arrows.insert(full.arrows.end(), right.arrows.begin(),
                                           right.arrows.end());
                        if (full.arrows.empty()) full.vertex = left.vertex;
                        gen[mono_index(full)] += t.coeff;
                    }
                    insert_row(std::move(gen));
                }
            }
        }
    }

    static std::optional<std::size_t> lead(const Vec& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (!v[i].is_zero()) return i;
        return std::nullopt;
    }

    void insert_row(Vec v) {
        v = residue(std::move(v));
        const auto l = lead(v);
        if (!l) return;
        const FieldElement inv = v[*l].inverse();
        for (auto& x : v) x = x * inv;
        for (auto& [ld, row] : rows_) {
            if (row.size() <= *l || row[*l].is_zero()) continue;
            const FieldElement c = row[*l];
            for (std::size_t j = 0; j <= *l; ++j) row[j] -= c * v[j];
        }
        rows_[*l] = std::move(v);
    }

    // Canonical residue modulo the reduced slice. Rows' tails live strictly
    // below their lead, so one descending sweep suffices.
    Vec residue(Vec v) const {
        for (std::size_t i = v.size(); i-- > 0;) {
            if (v[i].is_zero()) continue;
            auto it = rows_.find(i);
            if (it == rows_.end()) continue;
            const FieldElement c = v[i];
            const Vec& row = it->second;
            for (std::size_t j = 0; j <= i; ++j)
                if (!row[j].is_zero()) v[j] -= c * row[j];
        }
        return v;
    }

    bool all_pivots_at(std::size_t d) const {
        for (std::size_t i = degree_end_[d - 1]; i < degree_end_[d]; ++i)
            if (!rows_.count(i)) return false;
        return true;
    }

    std::string first_unreduced(std::size_t d) const {
        for (std::size_t i = degree_end_[d - 1]; i < degree_end_[d]; ++i)
            if (!rows_.count(i)) return label_of(monos_[i]);
        return "";
    }

    // Reduce an arbitrary composable word to basis coordinates by repeatedly
    // rewriting its degree-`cut` suffix.
    Vec reduce_word(const std::vector<std::size_t>& w, std::size_t cut,
                    std::size_t src_vertex) {
        if (w.size() <= cut) {
            PathMono m;
            m.arrows = w;
            if (w.empty()) m.vertex = src_vertex;
            return residue(unit_vector(mono_index(m)));
        }
        auto memo = cache_.find(w);
        if (memo != cache_.end()) return memo->second;
        std::vector<std::size_t> head(w.begin(), w.end() - static_cast<long>(cut));
        std::vector<std::size_t> tail(w.end() - static_cast<long>(cut), w.end());
        PathMono suffix;
        suffix.arrows = tail;
        Vec rs = residue(unit_vector(mono_index(suffix)));
        Vec acc(monos_.size(), zero_);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].is_zero()) continue;
            std::vector<std::size_t> next = head;
            next.insert(next.end(), monos_[i].arrows.begin(), monos_[i].arrows.end());
            const Vec sub = reduce_word(next, cut, src_vertex);
            for (std::size_t j = 0; j < acc.size(); ++j)
                if (!sub[j].is_zero()) acc[j] += rs[i] * sub[j];
        }
        cache_[w] = acc;
        return acc;
    }

    Vec unit_vector(std::size_t i) const {
        Vec v(monos_.size(), zero_);
        v[i] = FieldElement::one(p_.field);
        return v;
    }

    BuildResult assemble(std::size_t cut) {
        // Basis: non-pivot monomials below the cutoff, ordered by (degree, label).
        std::vector<std::size_t> basis;
        for (std::size_t i = 0; i < degree_end_[cut - 1]; ++i)
            if (!rows_.count(i)) basis.push_back(i);
        if (basis.empty())
            throw InconsistentPresentation("relations reduce the whole algebra to zero");
        std::stable_sort(basis.begin(), basis.end(), [&](std::size_t a, std::size_t b) {
            const std::size_t da = monos_[a].degree(), db = monos_[b].degree();
            if (da != db) return da < db;
            return label_of(monos_[a]) < label_of(monos_[b]);
        });

        std::vector<std::string> labels;
        std::vector<std::size_t> degrees;
        std::map<std::size_t, std::size_t> basis_pos;  // mono index -> basis position
        for (std::size_t b = 0; b < basis.size(); ++b) {
            labels.push_back(label_of(monos_[basis[b]]));
            degrees.push_back(monos_[basis[b]].degree());
            basis_pos[basis[b]] = b;
        }
        {
            std::set<std::string> seen(labels.begin(), labels.end());
            if (seen.size() != labels.size())
                throw PresentationError("path labels collide; rename arrows");
        }

        auto to_basis_coords = [&](const Vec& full) {
            Vec c(basis.size(), zero_);
            for (std::size_t i = 0; i < full.size(); ++i) {
                if (full[i].is_zero()) continue;
                auto it = basis_pos.find(i);
                if (it == basis_pos.end())
                    throw PresentationError("internal: residue left a non-basis monomial");
                c[it->second] = full[i];
            }
            return c;
        };

        SparseTable table;
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            const PathMono& x = monos_[basis[bi]];
            for (std::size_t bj = 0; bj < basis.size(); ++bj) {
                const PathMono& y = monos_[basis[bj]];
                if (!qdetail::product_composable(p_, x, y)) continue;
                std::vector<std::size_t> w = x.arrows;
                w.insert(w.end(), y.arrows.begin(), y.arrows.end());
                const std::size_t src = x.arrows.empty() ? x.vertex : y.vertex;
                const Vec prod = to_basis_coords(reduce_word(w, cut, src));
                std::vector<ProductTerm> terms;
                for (std::size_t k = 0; k < prod.size(); ++k)
                    if (!prod[k].is_zero()) terms.push_back({k, prod[k]});
                if (!terms.empty()) table[{bi, bj}] = std::move(terms);
            }
        }

        Vec unit(basis.size(), zero_);
        for (std::size_t v = 0; v < p_.vertices.size(); ++v)
            unit = vec_add(unit, to_basis_coords(residue(unit_vector(v))));
        if (vec_is_zero(unit))
            throw InconsistentPresentation("the unit reduces to zero");

        Algebra a(p_.field, labels, std::move(table), unit);
        const auto bad = a.verify();
        if (!bad.empty())
            throw PresentationError(
                "truncated reduction produced an inconsistent table (" + bad.front().kind + " " +
                bad.front().detail + "); raise max_degree");
        return BuildResult{std::move(a), std::move(labels), std::move(degrees), cut};
    }

    const QuiverPresentation& p_;
    std::size_t max_degree_;
    FieldElement zero_;

    std::vector<PathMono> monos_;  // ascending (degree, lex) order
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
    std::vector<std::size_t> degree_end_;  // monos_ prefix length per degree
    std::map<std::size_t, Vec> rows_;      // lead monomial -> reduced row
    std::map<std::vector<std::size_t>, Vec> cache_;
};

inline BuildResult build_algebra(const QuiverPresentation& p, std::size_t max_degree = 8) {
    return PresentationBuilder(p, max_degree).build();
}

}  // namespace frobcell
