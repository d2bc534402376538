#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mckay/diagram.hpp"
#include "mckay/errors.hpp"
#include "mckay/group_spec.hpp"
#include "mckay/serialize.hpp"
#include "mckay/verify.hpp"

namespace {

using namespace mckay;

void print_report(const VerificationReport& r) {
    for (const auto& c : r.checks)
        std::cout << "[" << to_string(c.status) << "] " << r.suite << "/" << c.name << ": "
                  << c.detail << "\n";
}

int cmd_build(const std::string& spec_text, const std::string& out_path) {
    const FiniteSubgroup g = build_group(parse_spec(spec_text));
    const std::string json = group_to_json(g);
    if (out_path.empty())
        std::cout << json;
    else
        write_file(out_path, json);
    return 0;
}

int cmd_graph(const std::string& spec_text, const std::string& json_path,
              const std::string& dot_path, std::uint64_t seed, double tol) {
    const GroupSpec spec = parse_spec(spec_text);
    const GroupAnalysis a = analyze(build_group(spec), to_string(spec), seed, tol);
    if (!json_path.empty()) write_file(json_path, graph_to_json(a.graph));
    if (!dot_path.empty()) write_file(dot_path, graph_to_dot(a.graph));
    if (json_path.empty() && dot_path.empty()) std::cout << graph_to_json(a.graph);
    return 0;
}

int cmd_classify(const std::string& path) {
    const ColoredMcKayGraph graph = graph_from_json(read_file(path));
    const std::vector<int> colors =
        graph.dim_w == 2 ? std::vector<int>{0} : std::vector<int>{1, 2};
    for (int color : colors) {
        const Multigraph sub = color == 0 ? graph.total() : color_subgraph(graph, color);
        const auto comps = components(sub);
        for (size_t c = 0; c < comps.size(); ++c) {
            const DiagramType t = classify_or_other(induced(sub, comps[c]));
            if (color != 0) std::cout << "color " << color << " ";
            std::cout << "component " << c << ": " << to_string(t) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& spec_text, const std::string& suite,
               const std::string& report_path, std::uint64_t seed, double tol) {
    const GroupSpec spec = parse_spec(spec_text);
    const GroupAnalysis a = analyze(build_group(spec), to_string(spec), seed, tol);
    std::vector<VerificationReport> reports;
    if (suite == "su2")
        reports.push_back(verify_su2(a));
    else if (suite == "parity")
        reports.push_back(verify_parity(a));
    else if (suite == "so4")
        reports.push_back(verify_so4(a));
    else if (suite == "apps")
        reports.push_back(verify_applications(a));
    else
        reports = run_suites(a, CorpusKind::su2);
    bool all = true;
    for (const auto& r : reports) {
        print_report(r);
        all = all && r.passed();
    }
    std::cout << a.label << ": " << (all ? "PASS" : "FAIL") << "\n";
    if (!report_path.empty()) write_file(report_path, reports_to_json(a.label, reports));
    return all ? 0 : 1;
}

int cmd_survey(long max_order, const std::string& report_path, std::uint64_t seed,
               double tol) {
    const SurveyResult result = run_survey(max_order, seed, tol);
    if (report_path.empty()) {
        std::cout << result.json;
    } else {
        write_file(report_path, result.json);
        std::cout << "survey: " << (result.all_passed ? "PASS" : "FAIL") << ", report in "
                  << report_path << "\n";
    }
    return result.all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"McKay diagrams of finite subgroups of SU(2) and SU(2)xSU(2)"};
    app.require_subcommand(1);
    // global flags (--tol, --seed) may appear after the subcommand name
    app.fallthrough();

    double tol = 1e-6;
    std::uint64_t seed = 0;
    app.add_option("--tol", tol, "integer-snapping tolerance")->capture_default_str();
    app.add_option("--seed", seed, "random seed for the character-table solver")
        ->capture_default_str();

    std::string spec_text, out_path, json_path, dot_path, graph_path, suite, report_path;
    long max_order = 0;

    auto* build = app.add_subcommand("build", "construct a group and print its JSON");
    build->add_option("spec", spec_text, "group spec")->required();
    build->add_option("--out", out_path, "output file (default stdout)");

    auto* graph = app.add_subcommand("graph", "emit the McKay graph of a group");
    graph->add_option("spec", spec_text, "group spec")->required();
    graph->add_option("--json", json_path, "write graph JSON here");
    graph->add_option("--dot", dot_path, "write DOT here");

    auto* classify_cmd = app.add_subcommand("classify", "classify a graph JSON file");
    classify_cmd->add_option("graph", graph_path, "graph JSON file")->required();

    auto* verify = app.add_subcommand("verify", "run verification suites on a group");
    verify->add_option("spec", spec_text, "group spec")->required();
    verify->add_option("--suite", suite, "su2|parity|so4|apps|all")
        ->required()
        ->check(CLI::IsMember({"su2", "parity", "so4", "apps", "all"}));
    verify->add_option("--report", report_path, "write report JSON here");

    auto* survey = app.add_subcommand("survey", "run every suite over the corpus");
    survey->add_option("--max-order", max_order, "largest group order to include")
        ->required()
        ->check(CLI::PositiveNumber);
    survey->add_option("--report", report_path, "write report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*build) return cmd_build(spec_text, out_path);
        if (*graph) return cmd_graph(spec_text, json_path, dot_path, seed, tol);
        if (*classify_cmd) return cmd_classify(graph_path);
        if (*verify) return cmd_verify(spec_text, suite, report_path, seed, tol);
        if (*survey) return cmd_survey(max_order, report_path, seed, tol);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
