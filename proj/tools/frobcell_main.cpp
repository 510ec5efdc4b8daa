// frobcell: exact-arithmetic toolkit for structure-constant algebras.
//
// Subcommands:
//   build    quiver spec -> algebra spec (bounded-degree reduction)
//   report   full analysis document for an algebra spec
//   verify   run a check suite; exit 0 pass / 1 violations / 2 load errors
//   fixture  write a built-in example bundle to a directory
//
// An umbrella header keeps the tool a thin shell over the library.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobcell/fixture_files.hpp"
#include "frobcell/report.hpp"

namespace {

using namespace frobcell;

std::map<std::string, std::string> parse_bindings(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> out;
    for (const auto& kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw SpecError("bad --param '" + kv + "' (expected name=value)");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

std::optional<std::string> opt_of(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s;
}

struct CommonOpts {
    std::vector<std::string> params;
    std::string field;
    std::string format = "text";
    bool search_poset = false;
    bool check_algebra = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
    cmd->add_option("--param", o.params, "Parameter binding name=value (repeatable)");
    cmd->add_option("--field", o.field, "Field override: q or fp:<p>");
    if (with_format)
        cmd->add_option("--format", o.format, "Output format: text | structured")
            ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_flag("--search-poset", o.search_poset,
                  "Search the linear extensions of the declared cell order");
    cmd->add_flag("--check-algebra", o.check_algebra,
                  "Validate associativity and unit axioms at load");
}

AlgebraSpec load_spec(const std::string& path, const CommonOpts& o) {
    AlgebraSpec spec =
        load_algebra_spec(read_json_file(path), parse_bindings(o.params), opt_of(o.field));
    if (o.check_algebra) {
        const auto bad = spec.algebra.verify();
        if (!bad.empty())
            throw SpecError("algebra axioms fail: " + bad.front().kind + " " + bad.front().detail);
    }
    if (o.search_poset && spec.cell) {
        const auto found = search_poset(spec.algebra, *spec.cell);
        if (found) {
            std::cerr << "note: using searched cell order";
            for (const auto& [x, y] : found->pairs())
                std::cerr << " " << found->name(x) << "<" << found->name(y);
            std::cerr << "\n";
            spec.cell->poset = *found;
        } else {
            std::cerr << "note: no linear extension of the declared order validates\n";
        }
    }
    return spec;
}

int cmd_build(const std::string& in, const std::string& out, std::size_t max_degree,
              const CommonOpts& o) {
    QuiverSpec qs = load_quiver_spec(read_json_file(in), parse_bindings(o.params), opt_of(o.field));
    if (max_degree != 0) qs.max_degree = max_degree;
    const BuildResult br = build_algebra(qs.presentation, qs.max_degree);
    write_text_file(out, pretty(dump_algebra_spec(br.algebra, std::nullopt, std::nullopt, qs.params)));
    std::cout << "built dimension " << br.algebra.dim() << " (cutoff degree " << br.cutoff
              << ") -> " << out << "\n";
    return 0;
}

int cmd_report(const std::string& in, const CommonOpts& o) {
    const AlgebraSpec spec = load_spec(in, o);
    if (!spec.trace) throw SpecError("spec has no trace; report needs one");
    const Json rep = structured_report(spec.algebra, *spec.trace, spec.cell);
    if (o.format == "structured") std::cout << pretty(rep);
    else
        std::cout << text_report(rep);
    return 0;
}

int cmd_verify(const std::string& in, const std::string& suite, const CommonOpts& o) {
    const AlgebraSpec spec = load_spec(in, o);
    if (!spec.trace) throw SpecError("spec has no trace; verify needs one");
    const VerifyOutcome out = run_suite(spec.algebra, *spec.trace, spec.cell, suite);
    if (o.format == "structured") {
        Json j;
        j["suite"] = suite;
        j["ok"] = out.ok();
        j["notes"] = out.notes;
        Json vs = Json::array();
        for (const auto& v : out.selected.violations)
            vs.push_back(Json{{"check", v.check}, {"detail", v.detail}});
        j["violations"] = vs;
        std::cout << pretty(j);
    } else {
        for (const auto& n : out.notes) std::cout << "note: " << n << "\n";
        for (const auto& v : out.selected.violations)
            std::cout << "VIOLATION " << v.check << ": " << v.detail << "\n";
        std::cout << "suite " << suite << ": " << (out.ok() ? "pass" : "fail") << " ("
                  << out.selected.violations.size() << " violations)\n";
    }
    return out.ok() ? 0 : 1;
}

int cmd_fixture(const std::string& name, const std::string& outdir, const CommonOpts& o) {
    const Field f = o.field.empty() ? Field::rationals() : Field::parse(o.field);
    const Fixture fx = make_fixture(name, f, parse_bindings(o.params));
    std::filesystem::create_directories(outdir);
    for (const auto& [fname, content] : fixture_files(fx)) {
        const std::string path = outdir + "/" + fname;
        write_text_file(path, content);
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for structure-constant algebras"};
    app.require_subcommand(1);

    CommonOpts bo, ro, vo, fo;
    std::string build_in, build_out, report_in, verify_in, verify_suite = "all",
                fixture_name, fixture_out;
    std::size_t max_degree = 0;

    CLI::App* build = app.add_subcommand("build", "build an algebra spec from a quiver spec");
    build->add_option("quiver-spec", build_in)->required();
    build->add_option("-o,--output", build_out)->required();
    build->add_option("--max-degree", max_degree, "Reduction bound override");
    add_common(build, bo, false);

    CLI::App* report = app.add_subcommand("report", "emit the full analysis document");
    report->add_option("algebra-spec", report_in)->required();
    add_common(report, ro);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("algebra-spec", verify_in)->required();
    verify->add_option("--suite", verify_suite,
                       "all | algebra | section2 | section3 | lemma-<id>");
    add_common(verify, vo);

    CLI::App* fixture = app.add_subcommand("fixture", "write a built-in example bundle");
    fixture->add_option("name", fixture_name, "nakayama-nesbitt | quiver-e42 | local-e43")
        ->required();
    fixture->add_option("-o,--output", fixture_out)->required();
    add_common(fixture, fo, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(build_in, build_out, max_degree, bo);
        if (report->parsed()) return cmd_report(report_in, ro);
        if (verify->parsed()) return cmd_verify(verify_in, verify_suite, vo);
        if (fixture->parsed()) return cmd_fixture(fixture_name, fixture_out, fo);
    } catch (const NotFrobeniusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "kernel witness: ";
        for (const auto& x : e.witness) std::cerr << x.to_string() << " ";
        std::cerr << "\n";
        return 2;
    } catch (const FrobcellError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
