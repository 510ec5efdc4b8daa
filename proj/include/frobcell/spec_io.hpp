#pragma once

// JSON spec files for algebras and quiver presentations. Scalars travel as
// canonical strings ("2", "-1/3") or parameter references ("lambda",
// "-lambda"); parameters are resolved to concrete field values at load time.
// Dumping is canonical, so load-then-dump is a byte-exact fixed point.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobcell/fixtures.hpp"

namespace frobcell {

using Json = nlohmann::ordered_json;

struct SpecError : FrobcellError {
    explicit SpecError(const std::string& msg) : FrobcellError(msg) {}
};

struct AlgebraSpec {
    Algebra algebra;
    std::optional<TraceForm> trace;
    std::optional<CellDatum> cell;
    std::vector<ParamSpec> params;
};

namespace iodetail {

inline FieldElement resolve_scalar(const Field& f, const std::string& s,
                                   const std::map<std::string, FieldElement>& params) {
    if (!s.empty()) {
        const bool neg = s[0] == '-';
        const std::string name = neg ? s.substr(1) : s;
        auto it = params.find(name);
        if (it != params.end()) return neg ? -it->second : it->second;
    }
    return FieldElement::parse(f, s);
}

inline std::map<std::string, FieldElement> bind_params(
    const Field& f, const Json& spec, const std::map<std::string, std::string>& overrides,
    std::vector<ParamSpec>* out) {
    std::map<std::string, FieldElement> values;
    if (!spec.contains("params")) {
        for (const auto& [k, v] : overrides)
            values.emplace(k, FieldElement::parse(f, v));
        return values;
    }
    for (const auto& p : spec.at("params")) {
        ParamSpec ps;
        ps.name = p.at("name").get<std::string>();
        std::string value = p.at("value").get<std::string>();
        auto ov = overrides.find(ps.name);
        if (ov != overrides.end()) value = ov->second;
        ps.value = FieldElement::parse(f, value);
        if (p.contains("forbidden"))
            for (const auto& b : p.at("forbidden")) ps.forbidden.push_back(b.get<std::string>());
        check_param(ps);
        if (out) out->push_back(ps);
        values.emplace(ps.name, ps.value);
    }
    for (const auto& [k, v] : overrides)
        if (!values.count(k)) values.emplace(k, FieldElement::parse(f, v));
    return values;
}

inline Field field_of(const Json& spec, const std::optional<std::string>& field_override) {
    if (field_override) return Field::parse(*field_override);
    if (!spec.contains("field")) throw SpecError("spec is missing its field descriptor");
    return Field::parse(spec.at("field").get<std::string>());
}

}  // namespace iodetail

inline AlgebraSpec load_algebra_spec(const Json& spec,
                                     const std::map<std::string, std::string>& overrides = {},
                                     const std::optional<std::string>& field_override = {}) {
    try {
        const Field f = iodetail::field_of(spec, field_override);
        std::vector<ParamSpec> params;
        const auto values = iodetail::bind_params(f, spec, overrides, &params);
        auto scalar = [&](const std::string& s) { return iodetail::resolve_scalar(f, s, values); };

        std::vector<std::string> labels;
        for (const auto& b : spec.at("basis")) labels.push_back(b.get<std::string>());
        const std::size_t dim = spec.at("dim").get<std::size_t>();
        if (labels.size() != dim) throw SpecError("dim does not match the basis list");
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
        auto idx = [&](const std::string& l) {
            auto it = index.find(l);
            if (it == index.end()) throw SpecError("unknown basis label '" + l + "'");
            return it->second;
        };

        Vec unit(dim, FieldElement::zero(f));
        for (const auto& [k, v] : spec.at("unit").items()) unit[idx(k)] = scalar(v.get<std::string>());

        SparseTable table;
        for (const auto& row : spec.at("table")) {
            const std::size_t i = idx(row.at(0).get<std::string>());
            const std::size_t j = idx(row.at(1).get<std::string>());
            std::vector<ProductTerm> terms;
            for (const auto& term : row.at(2)) {
                const FieldElement c = scalar(term.at(1).get<std::string>());
                if (!c.is_zero()) terms.push_back({idx(term.at(0).get<std::string>()), c});
            }
            if (table.count({i, j})) throw SpecError("duplicate table row");
            if (!terms.empty()) table[{i, j}] = std::move(terms);
        }

        AlgebraSpec out{Algebra(f, labels, std::move(table), std::move(unit)), {}, {}, params};

        if (spec.contains("trace")) {
            Vec tau(dim, FieldElement::zero(f));
            for (const auto& [k, v] : spec.at("trace").items())
                tau[idx(k)] = scalar(v.get<std::string>());
            out.trace = TraceForm{tau};
        }

        if (spec.contains("cell")) {
            const Json& c = spec.at("cell");
            std::vector<std::string> elems;
            for (const auto& e : c.at("poset").at("elements")) elems.push_back(e.get<std::string>());
            auto eidx = [&](const std::string& name) {
                for (std::size_t i = 0; i < elems.size(); ++i)
                    if (elems[i] == name) return i;
                throw SpecError("unknown poset element '" + name + "'");
            };
            std::vector<std::pair<std::size_t, std::size_t>> less;
            for (const auto& pr : c.at("poset").at("less"))
                less.emplace_back(eidx(pr.at(0).get<std::string>()), eidx(pr.at(1).get<std::string>()));
            CellDatum cd;
            cd.poset = Poset(elems, less);
            for (const auto& pj : c.at("parts")) {
                CellPart part;
                part.lambda = pj.at("lambda").get<std::string>();
                for (const auto& m : pj.at("m")) part.tableaux.push_back(m.get<std::string>());
                for (const auto& rowj : pj.at("grid")) {
                    std::vector<std::size_t> row;
                    for (const auto& lbl : rowj) row.push_back(idx(lbl.get<std::string>()));
                    part.grid.push_back(std::move(row));
                }
                cd.parts.push_back(std::move(part));
            }
            const Json& inv = c.at("involution");
            if (inv.is_string() && inv.get<std::string>() == "grid_transpose") {
                cd.grid_transpose_involution = true;
            } else if (inv.is_object() && inv.contains("matrix")) {
                cd.grid_transpose_involution = false;
                Matrix m(f, dim, dim);
                const Json& rows = inv.at("matrix");
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        m.at(i, j) = scalar(rows.at(i).at(j).get<std::string>());
                cd.involution = m;
            } else {
                throw SpecError("involution must be \"grid_transpose\" or {\"matrix\": ...}");
            }
            out.cell = std::move(cd);
        }
        return out;
    } catch (const Json::exception& e) {
        throw SpecError(std::string("malformed algebra spec: ") + e.what());
    }
}

inline Json dump_algebra_spec(const Algebra& a, const std::optional<TraceForm>& trace,
                              const std::optional<CellDatum>& cell,
                              const std::vector<ParamSpec>& params) {
    Json spec;
    spec["field"] = a.field().to_string();
    spec["dim"] = a.dim();
    spec["basis"] = a.labels();
    Json unit = Json::object();
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!a.unit()[i].is_zero()) unit[a.label(i)] = a.unit()[i].to_string();
    spec["unit"] = unit;
    Json table = Json::array();
    for (const auto& [key, terms] : a.table()) {
        Json row = Json::array();
        row.push_back(a.label(key.first));
        row.push_back(a.label(key.second));
        Json ts = Json::array();
        for (const auto& t : terms) ts.push_back(Json::array({a.label(t.k), t.coeff.to_string()}));
        row.push_back(ts);
        table.push_back(row);
    }
    spec["table"] = table;
    if (!params.empty()) {
        Json ps = Json::array();
        for (const auto& p : params) {
            Json pj;
            pj["name"] = p.name;
            pj["value"] = p.value.to_string();
            if (!p.forbidden.empty()) pj["forbidden"] = p.forbidden;
            ps.push_back(pj);
        }
        spec["params"] = ps;
    }
    if (trace) {
        Json tj = Json::object();
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!trace->tau[i].is_zero()) tj[a.label(i)] = trace->tau[i].to_string();
        spec["trace"] = tj;
    }
    if (cell) {
        Json cj;
        Json poset;
        poset["elements"] = cell->poset.elements();
        Json less = Json::array();
        for (const auto& [x, y] : cell->poset.pairs())
            less.push_back(Json::array({cell->poset.name(x), cell->poset.name(y)}));
        poset["less"] = less;
        cj["poset"] = poset;
        Json parts = Json::array();
        for (const auto& part : cell->parts) {
            Json pj;
            pj["lambda"] = part.lambda;
            pj["m"] = part.tableaux;
            Json grid = Json::array();
            for (const auto& row : part.grid) {
                Json rj = Json::array();
                for (auto b : row) rj.push_back(a.label(b));
                grid.push_back(rj);
            }
            pj["grid"] = grid;
            parts.push_back(pj);
        }
        cj["parts"] = parts;
        if (cell->grid_transpose_involution) {
            cj["involution"] = "grid_transpose";
        } else {
            Json rows = Json::array();
            for (std::size_t i = 0; i < a.dim(); ++i) {
                Json rj = Json::array();
                for (std::size_t j = 0; j < a.dim(); ++j)
                    rj.push_back(cell->involution->at(i, j).to_string());
                rows.push_back(rj);
            }
            cj["involution"] = Json{{"matrix", rows}};
        }
        spec["cell"] = cj;
    }
    return spec;
}

struct QuiverSpec {
    QuiverPresentation presentation;
    std::size_t max_degree = 8;
    std::vector<ParamSpec> params;
};

inline QuiverSpec load_quiver_spec(const Json& spec,
                                   const std::map<std::string, std::string>& overrides = {},
                                   const std::optional<std::string>& field_override = {}) {
    try {
        const Field f = iodetail::field_of(spec, field_override);
        QuiverSpec out;
        out.presentation.field = f;
        const auto values = iodetail::bind_params(f, spec, overrides, &out.params);

        std::map<std::string, std::size_t> vidx, aidx;
        for (const auto& v : spec.at("vertices")) {
            const std::string name = v.get<std::string>();
            if (vidx.count(name)) throw SpecError("duplicate vertex '" + name + "'");
            vidx[name] = out.presentation.vertices.size();
            out.presentation.vertices.push_back(name);
        }
        if (spec.contains("arrows"))
            for (const auto& aj : spec.at("arrows")) {
                Arrow arr;
                arr.name = aj.at("name").get<std::string>();
                if (vidx.count(arr.name) || aidx.count(arr.name))
                    throw SpecError("arrow name '" + arr.name + "' is not fresh");
                auto vat = [&](const std::string& n) {
                    auto it = vidx.find(n);
                    if (it == vidx.end()) throw SpecError("unknown vertex '" + n + "'");
                    return it->second;
                };
                arr.src = vat(aj.at("src").get<std::string>());
                arr.dst = vat(aj.at("dst").get<std::string>());
                aidx[arr.name] = out.presentation.arrows.size();
                out.presentation.arrows.push_back(arr);
            }
        if (spec.contains("relations"))
            for (const auto& rj : spec.at("relations")) {
                Relation rel;
                for (const auto& term : rj) {
                    PathMono m;
                    const Json& path = term.at(0);
                    if (path.size() == 1 && vidx.count(path.at(0).get<std::string>())) {
                        m.vertex = vidx.at(path.at(0).get<std::string>());
                    } else {
                        for (const auto& an : path) {
                            auto it = aidx.find(an.get<std::string>());
                            if (it == aidx.end())
                                throw SpecError("unknown arrow '" + an.get<std::string>() +
                                                "' in a relation");
                            m.arrows.push_back(it->second);
                        }
                    }
                    rel.push_back({m, iodetail::resolve_scalar(f, term.at(1).get<std::string>(),
                                                               values)});
                }
                out.presentation.relations.push_back(std::move(rel));
            }
        if (spec.contains("composition")) {
            const std::string c = spec.at("composition").get<std::string>();
            if (c == "left-to-right") out.presentation.composition = Composition::LeftToRight;
            else if (c == "right-to-left")
                out.presentation.composition = Composition::RightToLeft;
            else
                throw SpecError("composition must be left-to-right or right-to-left");
        }
        if (spec.contains("max_degree")) out.max_degree = spec.at("max_degree").get<std::size_t>();
        return out;
    } catch (const Json::exception& e) {
        throw SpecError(std::string("malformed quiver spec: ") + e.what());
    }
}

inline Json dump_quiver_spec(const QuiverPresentation& p, std::size_t max_degree,
                             const std::vector<ParamSpec>& params) {
    Json spec;
    spec["field"] = p.field.to_string();
    spec["vertices"] = p.vertices;
    Json arrows = Json::array();
    for (const auto& a : p.arrows)
        arrows.push_back(
            Json{{"name", a.name}, {"src", p.vertices[a.src]}, {"dst", p.vertices[a.dst]}});
    spec["arrows"] = arrows;
    Json rels = Json::array();
    for (const auto& rel : p.relations) {
        Json rj = Json::array();
        for (const auto& term : rel) {
            Json path = Json::array();
            if (term.path.arrows.empty()) path.push_back(p.vertices[term.path.vertex]);
            for (auto a : term.path.arrows) path.push_back(p.arrows[a].name);
            rj.push_back(Json::array({path, term.coeff.to_string()}));
        }
        rels.push_back(rj);
    }
    spec["relations"] = rels;
    spec["max_degree"] = max_degree;
    spec["composition"] = to_string(p.composition);
    if (!params.empty()) {
        Json ps = Json::array();
        for (const auto& pp : params) {
            Json pj;
            pj["name"] = pp.name;
            pj["value"] = pp.value.to_string();
            if (!pp.forbidden.empty()) pj["forbidden"] = pp.forbidden;
            ps.push_back(pj);
        }
        spec["params"] = ps;
    }
    return spec;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw SpecError("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw SpecError("cannot write '" + path + "'");
    out << text;
}

inline std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace frobcell
