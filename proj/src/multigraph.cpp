#include "mckay/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mckay/errors.hpp"

namespace mckay {

void Multigraph::add(int u, int v, int mult) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("Multigraph: vertex out of range");
    if (mult < 0) throw Error("Multigraph: negative multiplicity");
    if (mult == 0) return;
    if (u > v) std::swap(u, v);
    edges[{u, v}] += mult;
}

int Multigraph::mult(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edges.find({u, v});
    return it == edges.end() ? 0 : it->second;
}

bool Multigraph::has_loops() const {
    for (const auto& [k, m] : edges)
        if (k.first == k.second && m > 0) return true;
    return false;
}

int Multigraph::edge_count() const {
    int total = 0;
    for (const auto& [k, m] : edges) total += m;
    return total;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [k, m] : edges) {
        deg[k.first] += m;
        deg[k.second] += m; // a loop contributes 2 to its vertex
    }
    return deg;
}

Eigen::MatrixXd Multigraph::adjacency() const {
    return adjacency_int().cast<double>();
}

Eigen::MatrixXi Multigraph::adjacency_int() const {
    // Diagonal entries carry the stored loop multiplicity as-is: these
    // matrices are multiplicity matrices, not degree bookkeeping.
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (const auto& [k, m] : edges) {
        if (k.first == k.second) {
            a(k.first, k.first) += m;
        } else {
            a(k.first, k.second) += m;
            a(k.second, k.first) += m;
        }
    }
    return a;
}

std::vector<std::vector<int>> components(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [k, m] : g.edges) {
        if (m == 0 || k.first == k.second) continue;
        adj[k.first].push_back(k.second);
        adj[k.second].push_back(k.first);
    }
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        const int c = static_cast<int>(out.size());
        std::vector<int> verts{s};
        comp[s] = c;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (comp[v] == -1) {
                    comp[v] = c;
                    verts.push_back(v);
                    queue.push_back(v);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

Multigraph induced(const Multigraph& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    Multigraph out(static_cast<int>(verts.size()));
    for (const auto& [k, m] : g.edges) {
        const int u = pos[k.first], v = pos[k.second];
        if (u != -1 && v != -1) out.add(u, v, m);
    }
    return out;
}

namespace {

bool extend_isomorphism(const Multigraph& a, const Multigraph& b, const std::vector<int>& order,
                        const std::vector<int>& deg_a, const std::vector<int>& deg_b,
                        size_t depth, std::vector<int>& map, std::vector<bool>& used) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int v = 0; v < b.n; ++v) {
        if (used[v] || deg_a[u] != deg_b[v]) continue;
        bool ok = true;
        for (int w = 0; w < a.n && ok; ++w)
            if (map[w] != -1 && a.mult(u, w) != b.mult(v, map[w])) ok = false;
        if (a.mult(u, u) != b.mult(v, v)) ok = false;
        if (!ok) continue;
        map[u] = v;
        used[v] = true;
        if (extend_isomorphism(a, b, order, deg_a, deg_b, depth + 1, map, used)) return true;
        map[u] = -1;
        used[v] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> multigraph_isomorphism(const Multigraph& a, const Multigraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
    auto da = a.degrees(), db = b.degrees();
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    // Match vertices in BFS order from the highest-degree vertex so each step
    // is constrained by already-mapped neighbors.
    std::vector<int> order;
    std::vector<bool> seen(a.n, false);
    std::vector<int> start_order(a.n);
    std::iota(start_order.begin(), start_order.end(), 0);
    std::stable_sort(start_order.begin(), start_order.end(),
                     [&](int x, int y) { return da[x] > da[y]; });
    for (int s : start_order) {
        if (seen[s]) continue;
        seen[s] = true;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (int v = 0; v < a.n; ++v) {
                if (!seen[v] && a.mult(u, v) > 0) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }

    std::vector<int> map(a.n, -1);
    std::vector<bool> used(b.n, false);
    if (extend_isomorphism(a, b, order, da, db, 0, map, used)) return map;
    return std::nullopt;
}

std::optional<std::array<std::vector<int>, 2>> bipartition(const Multigraph& g) {
    if (g.has_loops()) return std::nullopt;
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < g.n; ++v) {
                if (g.mult(u, v) == 0 || u == v) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::array<std::vector<int>, 2> parts;
    for (int v = 0; v < g.n; ++v) parts[color[v]].push_back(v);
    return parts;
}

} // namespace mckay
