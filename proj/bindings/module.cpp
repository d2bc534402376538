#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mckay/diagram.hpp"
#include "mckay/errors.hpp"
#include "mckay/group_spec.hpp"
#include "mckay/serialize.hpp"
#include "mckay/verify.hpp"

namespace py = pybind11;
using namespace mckay;

namespace {

GroupAnalysis analyze_spec(const std::string& text, std::uint64_t seed, double tol) {
    const GroupSpec spec = parse_spec(text);
    return analyze(build_group(spec), to_string(spec), seed, tol);
}

std::vector<VerificationReport> run_named_suite(const GroupAnalysis& a,
                                                const std::string& suite) {
    if (suite == "su2") return {verify_su2(a)};
    if (suite == "parity") return {verify_parity(a)};
    if (suite == "so4") return {verify_so4(a)};
    if (suite == "apps") return {verify_applications(a)};
    if (suite == "all") return run_suites(a, CorpusKind::su2);
    throw UsageError("unknown suite " + suite + " (want su2|parity|so4|apps|all)");
}

} // namespace

PYBIND11_MODULE(_mckay, m) {
    m.doc() = "McKay graphs of finite subgroups of SU(2) and SU(2) x SU(2)";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const UsageError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const IoError& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        } catch (const NumericError& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def(
        "group_json",
        [](const std::string& spec) { return group_to_json(build_group(parse_spec(spec))); },
        py::arg("spec"), "Build a group and return its JSON description.");

    m.def(
        "graph_json",
        [](const std::string& spec, std::uint64_t seed, double tol) {
            return graph_to_json(analyze_spec(spec, seed, tol).graph);
        },
        py::arg("spec"), py::arg("seed") = 0, py::arg("tol") = 1e-6,
        "Return the McKay graph of a group as JSON.");

    m.def(
        "graph_dot",
        [](const std::string& spec, std::uint64_t seed, double tol) {
            return graph_to_dot(analyze_spec(spec, seed, tol).graph);
        },
        py::arg("spec"), py::arg("seed") = 0, py::arg("tol") = 1e-6,
        "Return the McKay graph of a group in DOT format.");

    m.def(
        "classify",
        [](const std::string& graph_json) {
            const ColoredMcKayGraph graph = graph_from_json(graph_json);
            const std::vector<int> colors =
                graph.dim_w == 2 ? std::vector<int>{0} : std::vector<int>{1, 2};
            std::vector<std::tuple<int, int, std::string>> out;
            for (int color : colors) {
                const Multigraph sub =
                    color == 0 ? graph.total() : color_subgraph(graph, color);
                const auto comps = components(sub);
                for (size_t c = 0; c < comps.size(); ++c)
                    out.emplace_back(color, static_cast<int>(c),
                                     to_string(classify_or_other(induced(sub, comps[c]))));
            }
            return out;
        },
        py::arg("graph_json"),
        "Classify each connected component per color; returns (color, component, type) "
        "tuples, color 0 for SU(2) graphs.");

    m.def(
        "verify",
        [](const std::string& spec, const std::string& suite, std::uint64_t seed,
           double tol) {
            const GroupAnalysis a = analyze_spec(spec, seed, tol);
            const auto reports = run_named_suite(a, suite);
            bool all = true;
            for (const auto& r : reports) all = all && r.passed();
            return std::make_pair(all, reports_to_json(a.label, reports));
        },
        py::arg("spec"), py::arg("suite") = "all", py::arg("seed") = 0,
        py::arg("tol") = 1e-6, "Run a verification suite; returns (passed, report_json).");

    m.def(
        "survey",
        [](long max_order, std::uint64_t seed, double tol) {
            const SurveyResult r = run_survey(max_order, seed, tol);
            return std::make_pair(r.all_passed, r.json);
        },
        py::arg("max_order"), py::arg("seed") = 0, py::arg("tol") = 1e-6,
        "Run every suite over the corpus; returns (passed, report_json).");

    m.def(
        "check_dimension_multiset",
        [](const std::vector<int>& dims) {
            const VerificationReport r = check_dimension_multiset(dims);
            return std::make_pair(r.passed(), report_to_json(r));
        },
        py::arg("dims"),
        "Apply the dimension rules to a multiset; returns (passed, report_json).");
}
