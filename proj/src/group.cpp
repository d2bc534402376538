#include "mckay/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

constexpr double kMinSeparation = 1e-3;
constexpr double kUnitNormTol = 1e-6;

// Deterministic uniform [0,1) from raw mt19937_64 output, independent of
// library distribution implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

void PointIndex::insert(const UnitQuaternionPair& p, int index) {
    if (index != static_cast<int>(points_.size()))
        throw Error("PointIndex: indices must be inserted consecutively");
    points_.push_back(p);
    cells_[canonical_key(p, grid_)].push_back(index);
}

std::optional<int> PointIndex::find(const UnitQuaternionPair& p) const {
    // Candidate cells per coordinate: the rounded cell, plus a neighbor when
    // the coordinate sits within the matching tolerance of a cell boundary.
    const auto c = coords(p);
    std::array<std::array<std::int64_t, 2>, 8> cand;
    std::array<int, 8> ncand;
    for (int i = 0; i < 8; ++i) {
        const std::int64_t base = std::llround(c[i] / grid_);
        const double frac = c[i] - static_cast<double>(base) * grid_;
        cand[i][0] = base;
        ncand[i] = 1;
        if (frac > grid_ / 2 - match_tol_) cand[i][ncand[i]++] = base + 1;
        else if (frac < -grid_ / 2 + match_tol_) cand[i][ncand[i]++] = base - 1;
    }
    std::array<int, 8> pick{};
    while (true) {
        GridKey key;
        for (int i = 0; i < 8; ++i) key.cell[i] = cand[i][pick[i]];
        if (auto it = cells_.find(key); it != cells_.end()) {
            for (int idx : it->second)
                if (max_coord_dist(points_[idx], p) < match_tol_) return idx;
        }
        int i = 0;
        for (; i < 8; ++i) {
            if (++pick[i] < ncand[i]) break;
            pick[i] = 0;
        }
        if (i == 8) return std::nullopt;
    }
}

int FiniteSubgroup::mul(int i, int j) const {
    auto k = index_.find(pair_mul(elements[i], elements[j]));
    if (!k) throw NumericError("group closure violated: product of stored elements not found");
    return *k;
}

namespace {

// Distinct stored elements must stay well separated (>= 1e-3 in
// max-coordinate distance), or tolerance matching is no longer meaningful.
// Scan pairs through a sliding window over the first coordinate.
void check_separation(const std::vector<UnitQuaternionPair>& elems, const std::string& what) {
    const int n = static_cast<int>(elems.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return elems[a].q1.a < elems[b].q1.a; });
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (elems[idx[j]].q1.a - elems[idx[i]].q1.a >= kMinSeparation) break;
            if (max_coord_dist(elems[idx[i]], elems[idx[j]]) < kMinSeparation)
                throw NumericError(what + ": elements closer than minimum separation 1e-3");
        }
    }
}

void check_unit_norm(const UnitQuaternionPair& p, const std::string& what) {
    if (std::fabs(norm(p.q1) - 1.0) > 1e-9 || std::fabs(norm(p.q2) - 1.0) > 1e-9)
        throw NumericError(what + ": element drifted off unit norm");
}

} // namespace

// Shared tail of every builder: index the elements, locate the identity and
// (-1,-1), resolve generators, build the inverse map, and spot-check closure.
FiniteSubgroup finalize_group(std::vector<UnitQuaternionPair> elems,
                              std::vector<UnitQuaternionPair> gens,
                              Ambient ambient, const std::string& what) {
    FiniteSubgroup g;
    g.ambient = ambient;
    g.elements = std::move(elems);
    const int n = g.order();
    if (n == 0) throw Error(what + ": empty element list");
    for (const auto& e : g.elements) check_unit_norm(e, what);

    for (int i = 0; i < n; ++i) g.index_.insert(g.elements[i], i);
    check_separation(g.elements, what);

    auto id = g.index_.find(kPairOne);
    if (!id || *id != 0) throw Error(what + ": identity must be element 0");
    g.identity_index = 0;

    UnitQuaternionPair minus_one{{-1, 0, 0, 0}, {-1, 0, 0, 0}};
    if (ambient == Ambient::SU2) {
        for (const auto& e : g.elements)
            if (max_coord_dist(e.q2, kQOne) > 1e-9)
                throw Error(what + ": SU(2) element with nontrivial second component");
        minus_one.q2 = kQOne;
    }
    g.minus_one_index = g.index_.find(minus_one);

    for (const auto& gen : gens) {
        auto gi = g.index_.find(gen);
        if (!gi) throw Error(what + ": generator not found in closed element set");
        g.generator_indices.push_back(*gi);
    }

    g.inverse_.resize(n);
    for (int i = 0; i < n; ++i) {
        auto inv = g.index_.find(pair_inverse(g.elements[i]));
        if (!inv) throw NumericError(what + ": inverse missing from element set");
        g.inverse_[i] = *inv;
    }

    // Closure spot-check: exhaustive for small groups, random pairs above.
    auto check_pair = [&](int i, int j) {
        if (!g.index_.find(pair_mul(g.elements[i], g.elements[j])))
            throw NumericError(what + ": closure spot-check failed");
    };
    if (n <= 500) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) check_pair(i, j);
    } else {
        std::mt19937_64 rng(0x5eedc105u);
        for (int t = 0; t < 10 * n; ++t) {
            int i = static_cast<int>(uniform01(rng) * n);
            int j = static_cast<int>(uniform01(rng) * n);
            check_pair(i, j);
        }
    }
    return g;
}

FiniteSubgroup cyclic(int n) {
    if (n < 1 || n > 1024) throw UsageError("cyclic: n must be in [1, 1024]");
    std::vector<UnitQuaternionPair> elems;
    elems.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * M_PI * k / n;
        elems.push_back({{std::cos(t), std::sin(t), 0, 0}, kQOne});
    }
    const double t = 2.0 * M_PI / n;
    std::vector<UnitQuaternionPair> gens{{{std::cos(t), std::sin(t), 0, 0}, kQOne}};
    if (n == 1) gens.clear();
    return finalize_group(std::move(elems), std::move(gens), Ambient::SU2, "cyclic");
}

FiniteSubgroup binary_dihedral(int n) {
    if (n < 1 || n > 256) throw UsageError("binary_dihedral: n must be in [1, 256]");
    std::vector<UnitQuaternionPair> elems;
    elems.reserve(4 * n);
    for (int k = 0; k < 2 * n; ++k) {
        const double t = M_PI * k / n;
        elems.push_back({{std::cos(t), std::sin(t), 0, 0}, kQOne});
    }
    for (int k = 0; k < 2 * n; ++k) {
        // (cos t + i sin t) * j = j cos t + k sin t
        const double t = M_PI * k / n;
        elems.push_back({{0, 0, std::cos(t), std::sin(t)}, kQOne});
    }
    const double t = M_PI / n;
    std::vector<UnitQuaternionPair> gens{
        {{std::cos(t), std::sin(t), 0, 0}, kQOne},
        {kQJ, kQOne},
    };
    return finalize_group(std::move(elems), std::move(gens), Ambient::SU2, "binary_dihedral");
}

namespace {

// 24 Hurwitz units: +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2.
std::vector<Quaternion> hurwitz_units() {
    std::vector<Quaternion> out;
    out.push_back(kQOne);
    out.push_back({-1, 0, 0, 0});
    for (int axis = 1; axis < 4; ++axis) {
        for (double s : {1.0, -1.0}) {
            Quaternion q{0, 0, 0, 0};
            (axis == 1 ? q.b : axis == 2 ? q.c : q.d) = s;
            out.push_back(q);
        }
    }
    for (int m = 0; m < 16; ++m) {
        out.push_back({(m & 1) ? -0.5 : 0.5, (m & 2) ? -0.5 : 0.5,
                       (m & 4) ? -0.5 : 0.5, (m & 8) ? -0.5 : 0.5});
    }
    return out;
}

std::vector<UnitQuaternionPair> embed_su2(const std::vector<Quaternion>& qs) {
    std::vector<UnitQuaternionPair> out;
    out.reserve(qs.size());
    for (const auto& q : qs) out.push_back({q, kQOne});
    return out;
}

const Quaternion kOmega{0.5, 0.5, 0.5, 0.5}; // order-6 element of 2T

} // namespace

FiniteSubgroup binary_tetrahedral() {
    auto elems = embed_su2(hurwitz_units());
    std::vector<UnitQuaternionPair> gens{{kQI, kQOne}, {kOmega, kQOne}};
    return finalize_group(std::move(elems), std::move(gens), Ambient::SU2, "binary_tetrahedral");
}

FiniteSubgroup binary_octahedral() {
    auto qs = hurwitz_units();
    // 24 more: exactly two nonzero coordinates, both +-1/sqrt(2).
    const double h = std::sqrt(0.5);
    for (int p = 0; p < 4; ++p) {
        for (int q = p + 1; q < 4; ++q) {
            for (double sp : {1.0, -1.0}) {
                for (double sq : {1.0, -1.0}) {
                    std::array<double, 4> v{0, 0, 0, 0};
                    v[p] = sp * h;
                    v[q] = sq * h;
                    qs.push_back({v[0], v[1], v[2], v[3]});
                }
            }
        }
    }
    auto elems = embed_su2(qs);
    std::vector<UnitQuaternionPair> gens{{{h, h, 0, 0}, kQOne}, {kOmega, kQOne}};
    return finalize_group(std::move(elems), std::move(gens), Ambient::SU2, "binary_octahedral");
}

FiniteSubgroup binary_icosahedral() {
    std::vector<Quaternion> qs = hurwitz_units(); // first 8 + 16 half units
    // 96 even coordinate permutations of (+-phi, +-1, +-1/phi, 0)/2.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const std::array<double, 3> mags{phi / 2, 0.5, 1 / (2 * phi)};
    static constexpr int even_perms[12][4] = {
        {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0},
    };
    for (const auto& p : even_perms) {
        for (int m = 0; m < 8; ++m) {
            std::array<double, 4> v{0, 0, 0, 0};
            for (int slot = 0; slot < 3; ++slot)
                v[p[slot]] = ((m >> slot) & 1) ? -mags[slot] : mags[slot];
            qs.push_back({v[0], v[1], v[2], v[3]});
        }
    }
    auto elems = embed_su2(qs);
    std::vector<UnitQuaternionPair> gens{
        {{mags[0], mags[1], mags[2], 0}, kQOne},
        {kOmega, kQOne},
    };
    return finalize_group(std::move(elems), std::move(gens), Ambient::SU2, "binary_icosahedral");
}

FiniteSubgroup product(const FiniteSubgroup& g1, const FiniteSubgroup& g2) {
    if (g1.ambient != Ambient::SU2 || g2.ambient != Ambient::SU2)
        throw UsageError("product: both factors must be SU(2) groups");
    const long n = static_cast<long>(g1.order()) * g2.order();
    if (n > kClosureCap) throw UsageError("product: order exceeds cap 20000");
    std::vector<UnitQuaternionPair> elems;
    elems.reserve(n);
    for (const auto& a : g1.elements)
        for (const auto& b : g2.elements) elems.push_back({a.q1, b.q1});
    std::vector<UnitQuaternionPair> gens;
    for (int gi : g1.generator_indices) gens.push_back({g1.elements[gi].q1, kQOne});
    for (int gi : g2.generator_indices) gens.push_back({kQOne, g2.elements[gi].q1});
    return finalize_group(std::move(elems), std::move(gens), Ambient::SU2xSU2, "product");
}

FiniteSubgroup diagonal(const FiniteSubgroup& g) {
    if (g.ambient != Ambient::SU2) throw UsageError("diagonal: argument must be an SU(2) group");
    std::vector<UnitQuaternionPair> elems;
    elems.reserve(g.order());
    for (const auto& e : g.elements) elems.push_back({e.q1, e.q1});
    std::vector<UnitQuaternionPair> gens;
    for (int gi : g.generator_indices) gens.push_back({g.elements[gi].q1, g.elements[gi].q1});
    return finalize_group(std::move(elems), std::move(gens), Ambient::SU2xSU2, "diagonal");
}

FiniteSubgroup from_generators(const std::vector<UnitQuaternionPair>& gens, int cap) {
    if (cap < 1 || cap > kClosureCap)
        throw UsageError("from_generators: cap must be in [1, 20000]");
    std::vector<UnitQuaternionPair> norm_gens;
    for (const auto& gen : gens) {
        if (std::fabs(norm(gen.q1) - 1.0) > kUnitNormTol ||
            std::fabs(norm(gen.q2) - 1.0) > kUnitNormTol)
            throw UsageError("from_generators: generator is not unit norm");
        norm_gens.push_back({normalized(gen.q1), normalized(gen.q2)});
    }

    // Breadth-first closure under right multiplication.  In a finite closure
    // each generator has finite order, so inverses arrive on their own.
    PointIndex index;
    std::vector<UnitQuaternionPair> elems{kPairOne};
    index.insert(kPairOne, 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int e = queue.front();
        queue.pop_front();
        for (const auto& gen : norm_gens) {
            UnitQuaternionPair p = pair_mul(elems[e], gen);
            if (index.find(p)) continue;
            if (static_cast<int>(elems.size()) >= cap)
                throw UsageError("from_generators: closure cap exceeded");
            index.insert(p, static_cast<int>(elems.size()));
            elems.push_back(p);
            queue.push_back(static_cast<int>(elems.size()) - 1);
        }
    }

    bool su2 = true;
    for (const auto& e : elems)
        if (max_coord_dist(e.q2, kQOne) > 1e-9) su2 = false;
    return finalize_group(std::move(elems), norm_gens, su2 ? Ambient::SU2 : Ambient::SU2xSU2,
                          "from_generators");
}

ConjugacyPartition conjugacy_classes(const FiniteSubgroup& g) {
    const int n = g.order();
    ConjugacyPartition part;
    part.class_of.assign(n, -1);

    // Conjugating by a generating set reaches the whole class.
    std::vector<int> gens = g.generator_indices;
    std::vector<int> gen_invs;
    for (int gi : gens) gen_invs.push_back(g.inverse(gi));

    for (int e = 0; e < n; ++e) {
        if (part.class_of[e] != -1) continue;
        const int cls = static_cast<int>(part.classes.size());
        std::vector<int> members{e};
        part.class_of[e] = cls;
        std::deque<int> queue{e};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (size_t k = 0; k < gens.size(); ++k) {
                const int y = g.mul(g.mul(gen_invs[k], x), gens[k]);
                if (part.class_of[y] == -1) {
                    part.class_of[y] = cls;
                    members.push_back(y);
                    queue.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        part.classes.push_back(std::move(members));
    }
    for (const auto& c : part.classes) part.representative.push_back(c.front());

    if (part.classes[0].size() != 1 || part.classes[0][0] != g.identity_index)
        throw Error("conjugacy_classes: identity class is not a singleton first class");
    size_t total = 0;
    for (const auto& c : part.classes) total += c.size();
    if (total != static_cast<size_t>(n)) throw Error("conjugacy_classes: classes do not partition G");
    return part;
}

std::optional<int> central_minus_one(const FiniteSubgroup& g) {
    return g.minus_one_index;
}

} // namespace mckay
