#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mckay {

// Undirected multigraph on vertices 0..n-1.  Edge multiplicities are stored
// once per unordered pair (u <= v); a key with u == v is a self-loop.
struct Multigraph {
    int n = 0;
    std::map<std::pair<int, int>, int> edges;

    Multigraph() = default;
    explicit Multigraph(int vertices) : n(vertices) {}

    void add(int u, int v, int mult);
    int mult(int u, int v) const;
    bool has_loops() const;
    int edge_count() const; // total multiplicity, loops included
    std::vector<int> degrees() const;
    // Multiplicity matrix: entry (u,v) is mult(u,v); a loop multiplicity
    // appears on the diagonal as-is (not doubled).
    Eigen::MatrixXd adjacency() const;
    Eigen::MatrixXi adjacency_int() const;
};

// Connected components as sorted vertex lists, ordered by smallest vertex.
// Isolated vertices form singleton components.
std::vector<std::vector<int>> components(const Multigraph& g);

// Subgraph induced on `verts` (which must be sorted); vertices are renumbered
// 0..k-1 in the given order.
Multigraph induced(const Multigraph& g, const std::vector<int>& verts);

// Exact multigraph isomorphism by backtracking with degree pruning.
// Returns a mapping m with m[vertex of a] = vertex of b, or nullopt.
std::optional<std::vector<int>> multigraph_isomorphism(const Multigraph& a, const Multigraph& b);

// Proper 2-coloring of a loop-free multigraph, or nullopt if an odd cycle
// (or a loop) exists.  Parts are sorted; the part containing vertex 0 of the
// first component comes first.
std::optional<std::array<std::vector<int>, 2>> bipartition(const Multigraph& g);

} // namespace mckay
