#include "mckay/mckay_graph.hpp"

#include <cmath>

#include "mckay/errors.hpp"

namespace mckay {

int ColoredMcKayGraph::mult(int u, int v, int color) const {
    if (u > v) std::swap(u, v);
    auto it = edges.find({u, v, color});
    return it == edges.end() ? 0 : it->second;
}

int ColoredMcKayGraph::mult(int u, int v) const {
    return mult(u, v, 1) + mult(u, v, 2);
}

Multigraph ColoredMcKayGraph::total() const {
    Multigraph g(size());
    for (const auto& [k, m] : edges) g.add(k[0], k[1], m);
    return g;
}

namespace {

// Multiplicity matrix n_ij = <chi_i, chi_W * chi_j> for one natural factor,
// snapped to non-negative integers.
Eigen::MatrixXi multiplicities(const CharacterTable& table, const ClassFunction& chi_w,
                               const std::vector<int>& class_sizes, long order, double tol) {
    const int r = table.r();
    Eigen::VectorXcd scale(r);
    for (int C = 0; C < r; ++C)
        scale(C) = chi_w.values(C) * static_cast<double>(class_sizes[C]) /
                   static_cast<double>(order);
    // (N)_ij = (1/|G|) sum_C conj(chi_i(C)) |C| chi_W(C) chi_j(C)
    Eigen::MatrixXcd N = table.values.conjugate() * scale.asDiagonal() * table.values.transpose();

    Eigen::MatrixXi out(r, r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            const double re = N(i, j).real();
            const double im = N(i, j).imag();
            const double rd = std::round(re);
            if (std::fabs(im) >= tol || std::fabs(re - rd) >= tol)
                throw NumericError("mckay_graph: multiplicity failed to snap to an integer");
            if (rd < 0) throw NumericError("mckay_graph: negative multiplicity after snapping");
            out(i, j) = static_cast<int>(rd);
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (out(i, j) != out(j, i))
                throw NumericError("mckay_graph: asymmetric multiplicities after snapping");
    return out;
}

} // namespace

ColoredMcKayGraph mckay_graph(const FiniteSubgroup& g, const ConjugacyPartition& part,
                              const CharacterTable& table, double tol) {
    const int r = table.r();
    ColoredMcKayGraph graph;
    graph.dim_w = g.ambient == Ambient::SU2 ? 2 : 4;

    for (int i = 0; i < r; ++i) {
        McKayVertex v;
        v.irrep_id = i;
        v.dim = table.degrees[i];
        v.parity = table.has_parity() ? table.parity[i] : 0;
        v.is_trivial = (i == table.trivial_row);
        graph.vertices.push_back(v);
    }

    const int ncolors = g.ambient == Ambient::SU2 ? 1 : 2;
    for (int color = 1; color <= ncolors; ++color) {
        const auto chi_w = natural_character(g, part,
                                             color == 1 ? NaturalFactor::W1 : NaturalFactor::W2);
        const auto N = multiplicities(table, chi_w, table.class_sizes, g.order(), tol);
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j)
                if (N(i, j) > 0) graph.edges[{i, j, color}] = N(i, j);
    }

    // The natural representation is faithful, so the diagram is connected.
    if (components(graph.total()).size() != 1)
        throw NumericError("mckay_graph: diagram is not connected");

    // Eigenvector identity: sum_j n_ij dim_j = dim_w * dim_i.
    for (int i = 0; i < r; ++i) {
        long s = 0;
        for (int j = 0; j < r; ++j)
            s += static_cast<long>(graph.mult(i, j)) * table.degrees[j];
        if (s != static_cast<long>(graph.dim_w) * table.degrees[i])
            throw NumericError("mckay_graph: dimension vector is not an eigenvector");
    }
    return graph;
}

ColoredMcKayGraph reduced(const ColoredMcKayGraph& graph) {
    int trivial = -1;
    for (int i = 0; i < graph.size(); ++i) {
        if (graph.vertices[i].is_trivial) {
            if (trivial != -1) throw UsageError("reduced: multiple trivial vertices");
            trivial = i;
        }
    }
    if (trivial == -1) throw UsageError("reduced: no trivial vertex");

    ColoredMcKayGraph out;
    out.dim_w = graph.dim_w;
    std::vector<int> newid(graph.size(), -1);
    for (int i = 0; i < graph.size(); ++i) {
        if (i == trivial) continue;
        McKayVertex v = graph.vertices[i];
        v.irrep_id = static_cast<int>(out.vertices.size());
        newid[i] = v.irrep_id;
        out.vertices.push_back(v);
    }
    for (const auto& [k, m] : graph.edges) {
        if (k[0] == trivial || k[1] == trivial) continue;
        out.edges[{newid[k[0]], newid[k[1]], k[2]}] = m;
    }
    return out;
}

Multigraph color_subgraph(const ColoredMcKayGraph& graph, int color) {
    if (graph.dim_w != 4) throw UsageError("color_subgraph: graph has a single color");
    if (color != 1 && color != 2) throw UsageError("color_subgraph: color must be 1 or 2");
    Multigraph g(graph.size());
    for (const auto& [k, m] : graph.edges)
        if (k[2] == color) g.add(k[0], k[1], m);
    return g;
}

std::array<std::vector<int>, 2> parity_bipartition(const ColoredMcKayGraph& graph) {
    if (!graph.has_parity())
        throw UsageError("parity_bipartition: parity undefined (-1 not in G)");
    std::array<std::vector<int>, 2> parts;
    for (int i = 0; i < graph.size(); ++i)
        parts[graph.vertices[i].parity == 1 ? 0 : 1].push_back(i);
    for (const auto& [k, m] : graph.edges) {
        if (m == 0) continue;
        if (graph.vertices[k[0]].parity == graph.vertices[k[1]].parity)
            throw NumericError("parity_bipartition: edge joins vertices of equal parity");
    }
    return parts;
}

} // namespace mckay
