#pragma once

// On-disk form of the fixture bundles: a materialized algebra spec, the
// quiver spec where the fixture is presentation-backed (with symbolic
// parameter references so it can be re-bound), and the provenance note.

#include <map>
#include <string>

#include "frobcell/spec_io.hpp"

namespace frobcell {

namespace fixturefiles {

// Quiver spec with "lambda" kept symbolic in the relation coefficients.
inline Json local_e43_quiver_json(const Field& f, const FieldElement& lambda) {
    Json spec;
    spec["field"] = f.to_string();
    spec["vertices"] = Json::array({"e"});
    Json arrows = Json::array();
    for (const char* n : {"b", "c", "a", "d"})
        arrows.push_back(Json{{"name", n}, {"src", "e"}, {"dst", "e"}});
    spec["arrows"] = arrows;
    Json rels = Json::array();
    auto single = [&](const char* x, const char* y) {
        rels.push_back(Json::array({Json::array({Json::array({x, y}), "1"})}));
    };
    single("a", "a");
    single("b", "b");
    single("c", "c");
    single("d", "d");
    single("a", "b");
    single("a", "c");
    single("b", "a");
    single("b", "d");
    single("c", "a");
    single("c", "d");
    single("d", "b");
    single("d", "c");
    rels.push_back(Json::array({Json::array({Json::array({"c", "b"}), "1"}),
                                Json::array({Json::array({"b", "c"}), "-lambda"})}));
    rels.push_back(Json::array({Json::array({Json::array({"a", "d"}), "1"}),
                                Json::array({Json::array({"b", "c"}), "-1"})}));
    rels.push_back(Json::array({Json::array({Json::array({"d", "a"}), "1"}),
                                Json::array({Json::array({"b", "c"}), "-1"})}));
    spec["relations"] = rels;
    spec["max_degree"] = 3;
    spec["composition"] = "left-to-right";
    spec["params"] = Json::array({Json{{"name", "lambda"},
                                       {"value", lambda.to_string()},
                                       {"forbidden", Json::array({"0", "1"})}}});
    return spec;
}

}  // namespace fixturefiles

// File name -> content for one fixture bundle.
inline std::map<std::string, std::string> fixture_files(const Fixture& fx) {
    std::map<std::string, std::string> out;
    out["algebra.json"] = pretty(dump_algebra_spec(fx.algebra, fx.trace, fx.cell, fx.params));
    if (fx.presentation) {
        if (fx.name == "local-e43") {
            out["quiver.json"] = pretty(fixturefiles::local_e43_quiver_json(
                fx.algebra.field(), fx.params.front().value));
        } else {
            out["quiver.json"] =
                pretty(dump_quiver_spec(*fx.presentation, fx.max_degree, fx.params));
        }
    }
    std::string note = "fixture: " + fx.name + "\nfield: " + fx.algebra.field().to_string() + "\n";
    for (const auto& p : fx.params) note += "param " + p.name + " = " + p.value.to_string() + "\n";
    note += fx.provenance;
    out["provenance.txt"] = note;
    return out;
}

}  // namespace frobcell
