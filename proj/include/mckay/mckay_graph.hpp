#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "mckay/char_table.hpp"
#include "mckay/group.hpp"
#include "mckay/multigraph.hpp"

namespace mckay {

struct McKayVertex {
    int irrep_id = 0;      // position in the canonical character-table order
    int dim = 1;           // chi(1)
    int parity = 0;        // +1 / -1, or 0 when -1 is not in G
    bool is_trivial = false;
};

// McKay diagram: vertices are the irreducibles, n_ij^k is the multiplicity of
// V_i in W_k (x) V_j.  SU(2) groups have a single color (1) and dim_w = 2;
// SU(2) x SU(2) groups have colors 1 and 2 and dim_w = 4.
struct ColoredMcKayGraph {
    int dim_w = 2;
    std::vector<McKayVertex> vertices;
    // (u, v, color) -> multiplicity, stored with u <= v; u == v is a loop.
    std::map<std::array<int, 3>, int> edges;

    int size() const { return static_cast<int>(vertices.size()); }
    int mult(int u, int v, int color) const;
    int mult(int u, int v) const; // total over colors
    bool has_parity() const { return !vertices.empty() && vertices.front().parity != 0; }

    Multigraph total() const; // all colors collapsed
};

ColoredMcKayGraph mckay_graph(const FiniteSubgroup& g, const ConjugacyPartition& part,
                              const CharacterTable& table, double tol = 1e-6);

// The diagram with the trivial vertex (and incident edges) removed.
ColoredMcKayGraph reduced(const ColoredMcKayGraph& graph);

// Gamma_k: all vertices, color-k edges only.  Requires dim_w = 4.
Multigraph color_subgraph(const ColoredMcKayGraph& graph, int color);

// Vertex sets by chi(-1) parity: (+1 part, -1 part).  Every edge of the total
// graph must cross the parts; an edge inside a part is an error.
std::array<std::vector<int>, 2> parity_bipartition(const ColoredMcKayGraph& graph);

} // namespace mckay
