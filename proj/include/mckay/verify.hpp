#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mckay/char_table.hpp"
#include "mckay/diagram.hpp"
#include "mckay/group.hpp"
#include "mckay/mckay_graph.hpp"

namespace mckay {

enum class CheckStatus { pass, fail, skip };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerificationReport {
    std::string group;
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const; // true when no check failed (skips allowed)
};

// Everything the verification suites need about one group, computed once.
struct GroupAnalysis {
    std::string label;
    FiniteSubgroup group;
    ConjugacyPartition part;
    CharacterTable table;
    ColoredMcKayGraph graph;
};

GroupAnalysis analyze(FiniteSubgroup g, const std::string& label, std::uint64_t seed = 0,
                      double tol = 1e-6);

// Main suite for SU(2) groups: symmetry, connectivity, the dim-vector
// eigen-identity, extended/Dynkin classification of the full/reduced diagram,
// dimension labels against the canonical null vector, and order recovery.
VerificationReport verify_su2(const GroupAnalysis& a);

// Parity suite for any group containing -1: parities defined, every edge
// crosses the bipartition, each part's dimension squares sum to |G|/2.
VerificationReport verify_parity(const GroupAnalysis& a);

// SO(4) structure suite: Euclidean color components, transversality,
// bipartite parity, one-dimensional eigenspace at 4, per-component dimension
// labels, order recovery.  Requires (-1,-1) in G.
VerificationReport verify_so4(const GroupAnalysis& a);

// Same structural checks without the parity requirement, for SU(2) x SU(2)
// groups that do not contain (-1,-1) (products of odd-order factors).
VerificationReport verify_so4_structure(const GroupAnalysis& a);

// Dimension-bound suite: max dim <= 36, prime factors in {2,3,5}, and an odd
// dimension > 1 forces a dimension 3.  Requires (-1,-1) in G.
VerificationReport verify_applications(const GroupAnalysis& a);

// The three dimension rules applied to a bare multiset.
VerificationReport check_dimension_multiset(const std::vector<int>& dims);

// ----- corpus and survey -------------------------------------------------

enum class CorpusKind { su2, product, diagonal, goursat };

struct CorpusEntry {
    std::string label;
    CorpusKind kind = CorpusKind::su2;
    long order = 0;
    std::function<FiniteSubgroup()> build;
};

// The fixed verification corpus: C_n (2 <= n <= 24), binary dihedral
// D_n (1 <= n <= 12), 2T, 2O, 2I; all unordered pairwise products; all
// diagonals; three fixed generator-closure subgroups of Goursat type.
// Filtered to entries with order <= max_order.
std::vector<CorpusEntry> corpus(long max_order);

// Generator sets of the three fixed Goursat-type subgroups.
std::vector<UnitQuaternionPair> goursat_generators(const std::string& name);

// All applicable suites for one analyzed group.
std::vector<VerificationReport> run_suites(const GroupAnalysis& a, CorpusKind kind);

struct SurveyEntry {
    std::string spec;
    CorpusKind kind = CorpusKind::su2;
    long order = 0;
    int classes = 0;
    std::vector<VerificationReport> reports;
    bool passed = false;
};

struct SurveyData {
    long max_order = 0;
    std::uint64_t seed = 0;
    double tol = 1e-6;
    std::vector<SurveyEntry> entries;
    bool all_passed = false;
};

struct SurveyResult {
    std::string json; // full report, serialized
    bool all_passed = false;
};

SurveyResult run_survey(long max_order, std::uint64_t seed = 0, double tol = 1e-6);

std::string to_string(CorpusKind k);

} // namespace mckay
