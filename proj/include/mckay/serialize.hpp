#pragma once

#include <string>
#include <vector>

#include "mckay/group.hpp"
#include "mckay/mckay_graph.hpp"
#include "mckay/verify.hpp"

namespace mckay {

// Graph JSON: {"dim_w":2|4, "vertices":[{"id","dim","parity","trivial"}...],
// "edges":[{"u","v","color","mult"}...]} with canonical vertex order, edges
// sorted by (u,v,color), two-space indentation, newline-terminated.
std::string graph_to_json(const ColoredMcKayGraph& graph);
ColoredMcKayGraph graph_from_json(const std::string& text);

// Undirected DOT: label "d=<dim>", filled iff parity +1, doublecircle for the
// trivial vertex, one edge line per unit of multiplicity; color 1 solid red,
// color 2 dashed blue, SU(2) graphs solid black.
std::string graph_to_dot(const ColoredMcKayGraph& graph);

// Group JSON: {"order", "ambient", "elements":[[8 floats]...], "generators"}
// with floats at 17 significant digits.
std::string group_to_json(const FiniteSubgroup& g);

// Reads a generator file {"pairs": [[8 floats]...]}; coordinates are
// renormalized, with unit-norm deviation > 1e-6 rejected.
std::vector<UnitQuaternionPair> read_gens_file(const std::string& path);

std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::string& group_label,
                            const std::vector<VerificationReport>& reports);
std::string survey_to_json(const SurveyData& data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace mckay
