#include "mckay/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mckay/errors.hpp"

namespace mckay {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failure on " + path);
}

std::string graph_to_json(const ColoredMcKayGraph& graph) {
    ordered_json j;
    j["dim_w"] = graph.dim_w;
    j["vertices"] = ordered_json::array();
    for (size_t i = 0; i < graph.vertices.size(); ++i) {
        const auto& v = graph.vertices[i];
        ordered_json jv;
        jv["id"] = static_cast<int>(i);
        jv["dim"] = v.dim;
        if (v.parity == 0)
            jv["parity"] = nullptr;
        else
            jv["parity"] = v.parity;
        jv["trivial"] = v.is_trivial;
        j["vertices"].push_back(jv);
    }
    j["edges"] = ordered_json::array();
    for (const auto& [k, m] : graph.edges) { // map order is already (u, v, color)
        if (m == 0) continue;
        ordered_json je;
        je["u"] = k[0];
        je["v"] = k[1];
        je["color"] = k[2];
        je["mult"] = m;
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

ColoredMcKayGraph graph_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("graph JSON: ") + e.what());
    }
    ColoredMcKayGraph graph;
    try {
        graph.dim_w = j.at("dim_w").get<int>();
        if (graph.dim_w != 2 && graph.dim_w != 4)
            throw UsageError("graph JSON: dim_w must be 2 or 4");
        for (const auto& jv : j.at("vertices")) {
            McKayVertex v;
            v.irrep_id = jv.at("id").get<int>();
            v.dim = jv.at("dim").get<int>();
            v.parity = jv.at("parity").is_null() ? 0 : jv.at("parity").get<int>();
            v.is_trivial = jv.at("trivial").get<bool>();
            if (v.dim < 1) throw UsageError("graph JSON: dim must be positive");
            if (v.parity != 0 && v.parity != 1 && v.parity != -1)
                throw UsageError("graph JSON: parity must be 1, -1, or null");
            graph.vertices.push_back(v);
        }
        const int n = static_cast<int>(graph.vertices.size());
        for (const auto& je : j.at("edges")) {
            const int u = je.at("u").get<int>();
            const int v = je.at("v").get<int>();
            const int color = je.at("color").get<int>();
            const int mult = je.at("mult").get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw UsageError("graph JSON: edge endpoint out of range");
            if (u > v) throw UsageError("graph JSON: edges must satisfy u <= v");
            if (color != 1 && color != 2)
                throw UsageError("graph JSON: color must be 1 or 2");
            if (graph.dim_w == 2 && color != 1)
                throw UsageError("graph JSON: SU(2) graphs have color 1 only");
            if (mult < 0) throw UsageError("graph JSON: mult must be non-negative");
            if (mult == 0) continue;
            const std::array<int, 3> key{u, v, color};
            if (graph.edges.count(key))
                throw UsageError("graph JSON: duplicate edge record");
            graph.edges[key] = mult;
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("graph JSON: ") + e.what());
    }
    return graph;
}

std::string graph_to_dot(const ColoredMcKayGraph& graph) {
    std::ostringstream out;
    out << "graph mckay {\n";
    for (size_t i = 0; i < graph.vertices.size(); ++i) {
        const auto& v = graph.vertices[i];
        out << "  v" << i << " [label=\"d=" << v.dim << "\", shape="
            << (v.is_trivial ? "doublecircle" : "circle");
        if (v.parity == 1) out << ", style=filled";
        out << "];\n";
    }
    for (const auto& [k, m] : graph.edges) {
        const char* attrs = graph.dim_w == 2 ? "color=black, style=solid"
                            : k[2] == 1      ? "color=red, style=solid"
                                             : "color=blue, style=dashed";
        for (int t = 0; t < m; ++t)
            out << "  v" << k[0] << " -- v" << k[1] << " [" << attrs << "];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string group_to_json(const FiniteSubgroup& g) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"order\": " << g.order() << ",\n";
    out << "  \"ambient\": \"" << (g.ambient == Ambient::SU2 ? "SU2" : "SU2xSU2") << "\",\n";
    out << "  \"elements\": [\n";
    for (int i = 0; i < g.order(); ++i) {
        const auto c = coords(g.elements[i]);
        out << "    [";
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) out << ", ";
            out << format_double(c[k]);
        }
        out << "]" << (i + 1 < g.order() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"generators\": [";
    for (size_t k = 0; k < g.generator_indices.size(); ++k) {
        if (k) out << ", ";
        out << g.generator_indices[k];
    }
    out << "]\n";
    out << "}\n";
    return out.str();
}

std::vector<UnitQuaternionPair> read_gens_file(const std::string& path) {
    const std::string text = read_file(path);
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("gens file: ") + e.what());
    }
    std::vector<UnitQuaternionPair> pairs;
    try {
        for (const auto& jp : j.at("pairs")) {
            if (!jp.is_array() || jp.size() != 8)
                throw UsageError("gens file: each pair must be an array of 8 numbers");
            std::array<double, 8> c{};
            for (size_t k = 0; k < 8; ++k) c[k] = jp[k].get<double>();
            const Quaternion q1{c[0], c[1], c[2], c[3]};
            const Quaternion q2{c[4], c[5], c[6], c[7]};
            if (std::abs(norm(q1) - 1.0) > 1e-6 || std::abs(norm(q2) - 1.0) > 1e-6)
                throw UsageError("gens file: coordinates deviate from unit norm by more "
                                 "than 1e-6");
            pairs.push_back({normalized(q1), normalized(q2)});
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("gens file: ") + e.what());
    }
    if (pairs.empty()) throw UsageError("gens file: no pairs given");
    return pairs;
}

namespace {

ordered_json report_obj(const VerificationReport& report) {
    ordered_json j;
    j["group"] = report.group;
    j["suite"] = report.suite;
    j["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    j["passed"] = report.passed();
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& report) {
    return report_obj(report).dump(2) + "\n";
}

std::string reports_to_json(const std::string& group_label,
                            const std::vector<VerificationReport>& reports) {
    ordered_json j;
    j["group"] = group_label;
    j["reports"] = ordered_json::array();
    bool all = true;
    for (const auto& r : reports) {
        j["reports"].push_back(report_obj(r));
        all = all && r.passed();
    }
    j["passed"] = all;
    return j.dump(2) + "\n";
}

std::string survey_to_json(const SurveyData& data) {
    ordered_json j;
    j["command"] = "survey";
    j["max_order"] = data.max_order;
    j["seed"] = data.seed;
    j["tol"] = data.tol;
    j["groups"] = ordered_json::array();
    for (const auto& e : data.entries) {
        ordered_json je;
        je["spec"] = e.spec;
        je["kind"] = to_string(e.kind);
        je["order"] = e.order;
        je["classes"] = e.classes;
        je["reports"] = ordered_json::array();
        for (const auto& r : e.reports) je["reports"].push_back(report_obj(r));
        je["passed"] = e.passed;
        j["groups"].push_back(je);
    }
    j["all_passed"] = data.all_passed;
    return j.dump(2) + "\n";
}

} // namespace mckay
