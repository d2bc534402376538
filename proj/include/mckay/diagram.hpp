#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mckay/mckay_graph.hpp"
#include "mckay/multigraph.hpp"

namespace mckay {

enum class DiagramFamily { A, D, E, ExtA, ExtD, ExtE, Other };

// Catalog identity of a connected diagram.  Parameter ranges: A(n>=1),
// D(n>=4), E(6|7|8), ExtA(n>=1), ExtD(n>=4), ExtE(6|7|8).  ExtA(1) is the
// two-vertex double edge; ExtA(n>=2) is the (n+1)-cycle.
struct DiagramType {
    DiagramFamily family = DiagramFamily::Other;
    int param = 0;
    bool operator==(const DiagramType&) const = default;
    bool is_extended() const {
        return family == DiagramFamily::ExtA || family == DiagramFamily::ExtD ||
               family == DiagramFamily::ExtE;
    }
    bool is_dynkin() const {
        return family == DiagramFamily::A || family == DiagramFamily::D ||
               family == DiagramFamily::E;
    }
};

std::string to_string(const DiagramType& t);

// Cartan matrix 2I - A of a loop-free diagram.
Eigen::MatrixXi cartan(const Multigraph& g);

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };
std::string to_string(Definiteness d);

// Definiteness of a Cartan matrix, computed two independent ways (eigenvalue
// signs, and the positive-vector criterion via a Perron vector of the
// adjacency).  Disagreement between the methods is an error.
Definiteness definiteness(const Eigen::MatrixXi& c);

// Classify a connected loop-free multigraph against the ADE catalog; returns
// Other when it matches nothing.  The result is cross-checked against
// definiteness (Dynkin <=> positive definite, extended <=> semidefinite).
DiagramType classify(const Multigraph& g);

// Like classify, but maps graphs with loops to Other instead of throwing.
DiagramType classify_or_other(const Multigraph& g);

// The canonical member of the catalog with the fixed vertex numbering used by
// canonical_null_vector.
Multigraph catalog_graph(const DiagramType& t);

// The positive integer null vector (minimum entry 1) of an extended diagram's
// Cartan matrix, in catalog_graph vertex order.
std::vector<int> canonical_null_vector(const DiagramType& t);

struct EigenResult {
    double eigenvalue = 0.0;
    Eigen::VectorXd vector; // positive entries, normalized to min entry 1
};

// Dominant eigenpair of a connected multigraph by (shifted) power iteration.
EigenResult perron_vector(const Multigraph& g);

// Dimension of the adjacency eigenspace at lambda: singular values of
// (A - lambda I) below tol.
int eigenspace_dim(const Multigraph& g, double lambda, double tol = 1e-6);

// Recover |G| from a McKay diagram: the positive eigenvector at
// lambda = dim_w, scaled to minimum entry 1, snapped to integers, summed as
// squares.  Requires a one-dimensional eigenspace.
long order_from_diagram(const Multigraph& g, int dim_w, double tol = 1e-6);

struct ProductWitness {
    DiagramType d1, d2;
    // Vertex v of the colored graph corresponds to
    // (catalog vertex coords[v].first of d1, catalog vertex coords[v].second of d2).
    std::vector<std::pair<int, int>> coords;
};

// Succeeds exactly when the edge-colored graph is the product of two
// Euclidean diagrams: Gamma_1 components all isomorphic (one per vertex of
// d2), likewise Gamma_2, every component pair meets in exactly one vertex,
// and the colored multiplicities factor exactly.
std::optional<ProductWitness> detect_product(const ColoredMcKayGraph& graph);

// Succeeds exactly when n^1 = n^2 everywhere and Gamma_1 is one Euclidean
// diagram; returns its type.
std::optional<DiagramType> detect_doubled(const ColoredMcKayGraph& graph);

} // namespace mckay
