#include "mckay/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "mckay/errors.hpp"
#include "mckay/serialize.hpp"

namespace mckay {

std::string to_string(CorpusKind k) {
    switch (k) {
        case CorpusKind::su2: return "su2";
        case CorpusKind::product: return "product";
        case CorpusKind::diagonal: return "diagonal";
        case CorpusKind::goursat: return "goursat";
    }
    return "su2";
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "fail";
}

bool VerificationReport::passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

namespace {

void add_check(VerificationReport& r, const std::string& name, bool ok,
               const std::string& detail) {
    r.checks.push_back({name, ok ? CheckStatus::pass : CheckStatus::fail, detail});
}

void add_skip(VerificationReport& r, const std::string& name, const std::string& detail) {
    r.checks.push_back({name, CheckStatus::skip, detail});
}

// Run a fallible predicate: library errors become check failures, never
// aborts, so a suite always lists all of its checks.
template <typename F>
void add_guarded(VerificationReport& r, const std::string& name, F&& f) {
    try {
        auto [ok, detail] = f();
        add_check(r, name, ok, detail);
    } catch (const Error& e) {
        add_check(r, name, false, std::string("error: ") + e.what());
    }
}

std::string dims_to_string(std::vector<int> dims) {
    std::sort(dims.begin(), dims.end());
    std::string s = "{";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + "}";
}

// "3 x ExtA(1), 1 x ExtE(6)" style summary of component types.
std::string type_census(const std::vector<DiagramType>& types) {
    std::map<std::string, int> count;
    for (const auto& t : types) ++count[to_string(t)];
    std::string s;
    for (const auto& [name, c] : count) {
        if (!s.empty()) s += ", ";
        s += std::to_string(c) + " x " + name;
    }
    return s;
}

// Per-component dimension labels against the canonical null vector of the
// component's type, up to the per-component scale (minimum label).
std::pair<bool, std::string> component_dims_match(const ColoredMcKayGraph& graph,
                                                  const Multigraph& color_graph,
                                                  const std::vector<int>& comp) {
    const Multigraph sub = induced(color_graph, comp);
    const DiagramType t = classify_or_other(sub);
    if (!t.is_extended()) return {false, "component classified " + to_string(t)};
    const auto iso = multigraph_isomorphism(sub, catalog_graph(t));
    if (!iso) return {false, "no isomorphism with catalog " + to_string(t)};
    const auto null_vec = canonical_null_vector(t);
    int scale = graph.vertices[comp[0]].dim;
    for (int v : comp) scale = std::min(scale, graph.vertices[v].dim);
    for (size_t i = 0; i < comp.size(); ++i) {
        if (graph.vertices[comp[i]].dim != scale * null_vec[(*iso)[i]])
            return {false, "labels of a " + to_string(t) +
                               " component are not proportional to its null vector"};
    }
    return {true, to_string(t) + " scaled by " + std::to_string(scale)};
}

const char* kDetailMinusOneAbsent = "-1 not in G";

} // namespace

GroupAnalysis analyze(FiniteSubgroup g, const std::string& label, std::uint64_t seed,
                      double tol) {
    GroupAnalysis a;
    a.label = label;
    a.group = std::move(g);
    a.part = conjugacy_classes(a.group);
    a.table = character_table(a.group, a.part, seed);
    a.graph = mckay_graph(a.group, a.part, a.table, tol);
    return a;
}

VerificationReport verify_su2(const GroupAnalysis& a) {
    if (a.group.ambient != Ambient::SU2)
        throw UsageError("verify_su2: group is not an SU(2) subgroup");
    VerificationReport r{a.label, "su2", {}};
    const Multigraph total = a.graph.total();

    add_guarded(r, "symmetry", [&] {
        for (const auto& [k, m] : a.graph.edges)
            if (k[0] > k[1] || m < 0) return std::pair{false, std::string("bad edge record")};
        return std::pair{true, std::string("n_ij = n_ji for all stored multiplicities")};
    });
    add_guarded(r, "connectivity", [&] {
        const size_t c = components(total).size();
        return std::pair{c == 1, std::to_string(c) + " connected component(s)"};
    });
    add_guarded(r, "eigenvector_identity", [&] {
        for (int i = 0; i < a.graph.size(); ++i) {
            long s = 0;
            for (int j = 0; j < a.graph.size(); ++j)
                s += static_cast<long>(a.graph.mult(i, j)) * a.graph.vertices[j].dim;
            if (s != 2L * a.graph.vertices[i].dim)
                return std::pair{false, "sum n_ij dim_j != 2 dim_i at vertex " + std::to_string(i)};
        }
        return std::pair{true, std::string("sum_j n_ij dim_j = 2 dim_i for all i")};
    });

    const DiagramType t_full = classify_or_other(total);
    add_check(r, "full_extended", t_full.is_extended(), "full diagram: " + to_string(t_full));

    add_guarded(r, "reduced_dynkin", [&] {
        const DiagramType t_red = classify_or_other(reduced(a.graph).total());
        DiagramType want{DiagramFamily::Other, 0};
        if (t_full.family == DiagramFamily::ExtA) want = {DiagramFamily::A, t_full.param};
        if (t_full.family == DiagramFamily::ExtD) want = {DiagramFamily::D, t_full.param};
        if (t_full.family == DiagramFamily::ExtE) want = {DiagramFamily::E, t_full.param};
        return std::pair{t_red == want && want.family != DiagramFamily::Other,
                         "reduced diagram: " + to_string(t_red)};
    });
    add_guarded(r, "dims_null_vector", [&]() -> std::pair<bool, std::string> {
        if (!t_full.is_extended()) return {false, "full diagram not extended"};
        const auto iso = multigraph_isomorphism(total, catalog_graph(t_full));
        if (!iso) return {false, "no catalog isomorphism"};
        const auto null_vec = canonical_null_vector(t_full);
        for (int v = 0; v < a.graph.size(); ++v)
            if (a.graph.vertices[v].dim != null_vec[(*iso)[v]])
                return {false, "dimension labels differ from the canonical null vector"};
        std::vector<int> dims;
        for (const auto& vx : a.graph.vertices) dims.push_back(vx.dim);
        return {true, "labels " + dims_to_string(dims)};
    });
    add_guarded(r, "order_recovery", [&] {
        const long got = order_from_diagram(total, 2);
        return std::pair{got == a.group.order(),
                         "recovered order " + std::to_string(got) + ", |G| = " +
                             std::to_string(a.group.order())};
    });
    if (a.group.minus_one_index) {
        add_guarded(r, "parity_bipartition", [&] {
            const auto parts = parity_bipartition(a.graph);
            return std::pair{true, "parts of sizes " + std::to_string(parts[0].size()) + " and " +
                                       std::to_string(parts[1].size())};
        });
    } else {
        add_skip(r, "parity_bipartition", kDetailMinusOneAbsent);
    }
    return r;
}

VerificationReport verify_parity(const GroupAnalysis& a) {
    if (!a.group.minus_one_index) throw UsageError("verify_parity: -1 is not in G");
    VerificationReport r{a.label, "parity", {}};

    add_guarded(r, "parity_defined", [&] {
        for (const auto& v : a.graph.vertices)
            if (v.parity != 1 && v.parity != -1)
                return std::pair{false, std::string("vertex with undefined parity")};
        return std::pair{true, std::string("chi(-1) = +-chi(1) on every irreducible")};
    });
    add_guarded(r, "edges_cross", [&] {
        for (const auto& [k, m] : a.graph.edges) {
            if (m == 0) continue;
            if (a.graph.vertices[k[0]].parity == a.graph.vertices[k[1]].parity)
                return std::pair{false, "edge (" + std::to_string(k[0]) + "," +
                                            std::to_string(k[1]) + ") joins equal parities"};
        }
        return std::pair{true, std::string("every edge joins opposite parities")};
    });
    add_guarded(r, "part_dim_squares", [&] {
        long plus = 0, minus = 0;
        std::vector<int> dplus, dminus;
        for (const auto& v : a.graph.vertices) {
            if (v.parity == 1) {
                plus += static_cast<long>(v.dim) * v.dim;
                dplus.push_back(v.dim);
            } else {
                minus += static_cast<long>(v.dim) * v.dim;
                dminus.push_back(v.dim);
            }
        }
        const long half = a.group.order() / 2;
        return std::pair{plus == half && minus == half,
                         "dims " + dims_to_string(dplus) + " / " + dims_to_string(dminus) +
                             ", squares " + std::to_string(plus) + " / " + std::to_string(minus) +
                             ", |G|/2 = " + std::to_string(half)};
    });
    return r;
}

namespace {

VerificationReport so4_core(const GroupAnalysis& a, bool with_parity) {
    VerificationReport r{a.label, with_parity ? "so4" : "so4-structure", {}};
    const Multigraph total = a.graph.total();
    const Multigraph g1 = color_subgraph(a.graph, 1);
    const Multigraph g2 = color_subgraph(a.graph, 2);
    const auto comps1 = components(g1);
    const auto comps2 = components(g2);

    auto euclidean_components = [&](const Multigraph& g, const std::vector<std::vector<int>>& comps) {
        std::vector<DiagramType> types;
        bool ok = true;
        for (const auto& comp : comps) {
            const DiagramType t = classify_or_other(induced(g, comp));
            types.push_back(t);
            if (!t.is_extended()) ok = false;
        }
        return std::pair{ok, type_census(types)};
    };
    add_guarded(r, "gamma1_euclidean", [&] { return euclidean_components(g1, comps1); });
    add_guarded(r, "gamma2_euclidean", [&] { return euclidean_components(g2, comps2); });

    add_guarded(r, "transversality", [&] {
        std::vector<int> in1(a.graph.size(), -1);
        for (size_t c = 0; c < comps1.size(); ++c)
            for (int v : comps1[c]) in1[v] = static_cast<int>(c);
        for (size_t c2 = 0; c2 < comps2.size(); ++c2) {
            std::vector<bool> met(comps1.size(), false);
            for (int v : comps2[c2]) met[in1[v]] = true;
            if (!std::all_of(met.begin(), met.end(), [](bool b) { return b; }))
                return std::pair{false, "a Gamma_1 component misses Gamma_2 component " +
                                            std::to_string(c2)};
        }
        return std::pair{true, std::to_string(comps1.size()) + " x " +
                                   std::to_string(comps2.size()) +
                                   " component pairs all intersect"};
    });

    if (with_parity) {
        add_guarded(r, "bipartite_parity", [&] {
            const auto parts = parity_bipartition(a.graph);
            return std::pair{true, "parts of sizes " + std::to_string(parts[0].size()) + " and " +
                                       std::to_string(parts[1].size())};
        });
    } else {
        add_skip(r, "bipartite_parity", "(-1,-1) not in G");
    }

    add_guarded(r, "eigenspace_dim", [&] {
        const int d = eigenspace_dim(total, 4.0);
        return std::pair{d == 1, "eigenspace at 4 has dimension " + std::to_string(d)};
    });
    add_guarded(r, "component_dims", [&]() -> std::pair<bool, std::string> {
        for (const auto* pair : {&comps1, &comps2}) {
            const Multigraph& g = (pair == &comps1) ? g1 : g2;
            for (const auto& comp : *pair) {
                auto [ok, detail] = component_dims_match(a.graph, g, comp);
                if (!ok) return {false, detail};
            }
        }
        return {true, "labels proportional to canonical null vectors on every component"};
    });
    add_guarded(r, "order_recovery", [&] {
        const long got = order_from_diagram(total, 4);
        return std::pair{got == a.group.order(),
                         "recovered order " + std::to_string(got) + ", |G| = " +
                             std::to_string(a.group.order())};
    });
    return r;
}

} // namespace

VerificationReport verify_so4(const GroupAnalysis& a) {
    if (a.group.ambient != Ambient::SU2xSU2)
        throw UsageError("verify_so4: group is not an SU(2) x SU(2) subgroup");
    if (!a.group.minus_one_index) throw UsageError("verify_so4: (-1,-1) is not in G");
    return so4_core(a, true);
}

VerificationReport verify_so4_structure(const GroupAnalysis& a) {
    if (a.group.ambient != Ambient::SU2xSU2)
        throw UsageError("verify_so4_structure: group is not an SU(2) x SU(2) subgroup");
    return so4_core(a, a.group.minus_one_index.has_value());
}

namespace {

bool smooth_235(int d) {
    for (int p : {2, 3, 5})
        while (d % p == 0) d /= p;
    return d == 1;
}

} // namespace

VerificationReport verify_applications(const GroupAnalysis& a) {
    if (a.group.ambient != Ambient::SU2xSU2)
        throw UsageError("verify_applications: group is not an SU(2) x SU(2) subgroup");
    if (!a.group.minus_one_index)
        throw UsageError("verify_applications: (-1,-1) is not in G");
    VerificationReport r{a.label, "apps", {}};
    const auto& dims = a.table.degrees;

    const int max_dim = *std::max_element(dims.begin(), dims.end());
    add_check(r, "max_dim_le_36", max_dim <= 36, "max dim = " + std::to_string(max_dim));

    bool smooth = true;
    int bad = 0;
    for (int d : dims)
        if (!smooth_235(d)) { smooth = false; bad = d; }
    add_check(r, "prime_factors_235", smooth,
              smooth ? "all dims factor over {2,3,5}"
                     : "dim " + std::to_string(bad) + " has a prime factor outside {2,3,5}");

    const bool has_odd_gt1 = std::any_of(dims.begin(), dims.end(),
                                         [](int d) { return d > 1 && d % 2 == 1; });
    const bool has_three = std::find(dims.begin(), dims.end(), 3) != dims.end();
    add_check(r, "odd_implies_three", !has_odd_gt1 || has_three,
              has_odd_gt1 ? (has_three ? "odd dim > 1 present together with dim 3"
                                       : "odd dim > 1 present but dim 3 absent")
                          : "no odd dim > 1");
    return r;
}

VerificationReport check_dimension_multiset(const std::vector<int>& dims) {
    if (dims.empty()) throw UsageError("check_dimension_multiset: empty multiset");
    VerificationReport r{dims_to_string(dims), "dimension_rules", {}};

    const int max_dim = *std::max_element(dims.begin(), dims.end());
    add_check(r, "max > 36", max_dim <= 36, "max dim = " + std::to_string(max_dim));

    bool smooth = true;
    int bad = 0;
    for (int d : dims)
        if (!smooth_235(d)) { smooth = false; bad = d; }
    add_check(r, "prime outside {2,3,5}", smooth,
              smooth ? "all dims factor over {2,3,5}"
                     : "dim " + std::to_string(bad) + " has a prime factor outside {2,3,5}");

    const bool has_odd_gt1 = std::any_of(dims.begin(), dims.end(),
                                         [](int d) { return d > 1 && d % 2 == 1; });
    const bool has_three = std::find(dims.begin(), dims.end(), 3) != dims.end();
    add_check(r, "odd > 1 without 3", !has_odd_gt1 || has_three,
              has_odd_gt1 ? (has_three ? "odd dim > 1 present together with dim 3"
                                       : "odd dim > 1 present but dim 3 absent")
                          : "no odd dim > 1");
    return r;
}

// ----- corpus and survey -------------------------------------------------

std::vector<UnitQuaternionPair> goursat_generators(const std::string& name) {
    const auto unit = [](double angle) {
        return Quaternion{std::cos(angle), std::sin(angle), 0, 0};
    };
    if (name == "c8-twist")
        return {{unit(M_PI / 4), unit(3 * M_PI / 4)}};
    if (name == "c12-twist")
        return {{unit(M_PI / 6), unit(5 * M_PI / 6)}};
    if (name == "fiber-2T-2T") {
        const Quaternion omega{0.5, 0.5, 0.5, 0.5};
        return {{omega, omega}, {kQI, kQOne}, {kQJ, kQOne}, {kQOne, kQI}, {kQOne, kQJ}};
    }
    throw UsageError("goursat_generators: unknown set " + name);
}

std::vector<CorpusEntry> corpus(long max_order) {
    struct Base {
        std::string label;
        long order;
        std::function<FiniteSubgroup()> build;
    };
    std::vector<Base> base;
    for (int n = 2; n <= 24; ++n)
        base.push_back({"C" + std::to_string(n), n, [n] { return cyclic(n); }});
    for (int n = 1; n <= 12; ++n)
        base.push_back({"D" + std::to_string(n), 4L * n, [n] { return binary_dihedral(n); }});
    base.push_back({"2T", 24, [] { return binary_tetrahedral(); }});
    base.push_back({"2O", 48, [] { return binary_octahedral(); }});
    base.push_back({"2I", 120, [] { return binary_icosahedral(); }});

    std::vector<CorpusEntry> out;
    for (const auto& b : base)
        out.push_back({b.label, CorpusKind::su2, b.order, b.build});
    for (size_t i = 0; i < base.size(); ++i) {
        for (size_t j = i; j < base.size(); ++j) {
            const auto &bi = base[i], &bj = base[j];
            out.push_back({"prod(" + bi.label + "," + bj.label + ")", CorpusKind::product,
                           bi.order * bj.order,
                           [bi, bj] { return product(bi.build(), bj.build()); }});
        }
    }
    for (const auto& b : base)
        out.push_back({"diag(" + b.label + ")", CorpusKind::diagonal, b.order,
                       [b] { return diagonal(b.build()); }});
    for (const auto& [name, ord] :
         std::vector<std::pair<std::string, long>>{{"c8-twist", 8}, {"c12-twist", 12},
                                                   {"fiber-2T-2T", 192}}) {
        out.push_back({"goursat:" + name, CorpusKind::goursat, ord,
                       [name = name] { return from_generators(goursat_generators(name), kClosureCap); }});
    }

    std::erase_if(out, [&](const CorpusEntry& e) { return e.order > max_order; });
    return out;
}

namespace {

VerificationReport structure_suite(const GroupAnalysis& a, CorpusKind kind) {
    VerificationReport r{a.label, "structure", {}};
    const auto prod = detect_product(a.graph);
    const auto doubled = detect_doubled(a.graph);
    const std::string prod_detail =
        prod ? "detected product " + to_string(prod->d1) + " x " + to_string(prod->d2)
             : "no product structure";
    const std::string doubled_detail =
        doubled ? "detected doubled " + to_string(*doubled) : "no doubled structure";
    if (kind == CorpusKind::product) {
        add_check(r, "detect_product_succeeds", prod.has_value(), prod_detail);
        add_check(r, "detect_doubled_fails", !doubled.has_value(), doubled_detail);
    } else if (kind == CorpusKind::diagonal) {
        add_check(r, "detect_doubled_succeeds", doubled.has_value(), doubled_detail);
        add_check(r, "detect_product_fails", !prod.has_value(), prod_detail);
    } else {
        add_check(r, "detect_product_fails", !prod.has_value(), prod_detail);
        add_check(r, "detect_doubled_fails", !doubled.has_value(), doubled_detail);
    }
    return r;
}

} // namespace

std::vector<VerificationReport> run_suites(const GroupAnalysis& a, CorpusKind kind) {
    std::vector<VerificationReport> reports;
    if (a.group.ambient == Ambient::SU2) {
        reports.push_back(verify_su2(a));
        if (a.group.minus_one_index) reports.push_back(verify_parity(a));
    } else {
        if (a.group.minus_one_index) {
            reports.push_back(verify_so4(a));
            reports.push_back(verify_parity(a));
            reports.push_back(verify_applications(a));
        } else {
            reports.push_back(verify_so4_structure(a));
        }
        if (kind != CorpusKind::su2) reports.push_back(structure_suite(a, kind));
    }
    return reports;
}

SurveyResult run_survey(long max_order, std::uint64_t seed, double tol) {
    auto entries = corpus(max_order);
    std::sort(entries.begin(), entries.end(),
              [](const CorpusEntry& x, const CorpusEntry& y) { return x.label < y.label; });

    SurveyData data;
    data.max_order = max_order;
    data.seed = seed;
    data.tol = tol;
    data.all_passed = true;
    for (const auto& entry : entries) {
        const GroupAnalysis a = analyze(entry.build(), entry.label, seed, tol);
        if (a.group.order() != entry.order)
            throw Error("survey: corpus order mismatch for " + entry.label);
        SurveyEntry se;
        se.spec = entry.label;
        se.kind = entry.kind;
        se.order = entry.order;
        se.classes = a.part.size();
        se.reports = run_suites(a, entry.kind);
        se.passed = std::all_of(se.reports.begin(), se.reports.end(),
                                [](const VerificationReport& r) { return r.passed(); });
        data.all_passed = data.all_passed && se.passed;
        data.entries.push_back(std::move(se));
    }

    SurveyResult out;
    out.all_passed = data.all_passed;
    out.json = survey_to_json(data);
    return out;
}

} // namespace mckay
