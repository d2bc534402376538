#include <random>
#include <vector>

#include "doctest.h"
#include "mckay/diagram.hpp"
#include "mckay/errors.hpp"

using namespace mckay;

namespace {

std::vector<DiagramType> extended_catalog_upto(int max_vertices) {
    std::vector<DiagramType> out;
    for (int n = 1; n + 1 <= max_vertices; ++n) out.push_back({DiagramFamily::ExtA, n});
    for (int n = 4; n + 1 <= max_vertices; ++n) out.push_back({DiagramFamily::ExtD, n});
    for (int n = 6; n <= 8; ++n)
        if (n + 1 <= max_vertices) out.push_back({DiagramFamily::ExtE, n});
    return out;
}

std::vector<DiagramType> dynkin_catalog_upto(int max_vertices) {
    std::vector<DiagramType> out;
    for (int n = 1; n <= max_vertices; ++n) out.push_back({DiagramFamily::A, n});
    for (int n = 4; n <= max_vertices; ++n) out.push_back({DiagramFamily::D, n});
    for (int n = 6; n <= 8; ++n)
        if (n <= max_vertices) out.push_back({DiagramFamily::E, n});
    return out;
}

} // namespace

TEST_CASE("catalog round trip") {
    for (const DiagramType& t : dynkin_catalog_upto(12)) {
        CHECK(classify(catalog_graph(t)) == t);
        CHECK(definiteness(cartan(catalog_graph(t))) == Definiteness::positive_definite);
    }
    for (const DiagramType& t : extended_catalog_upto(12)) {
        CHECK(classify(catalog_graph(t)) == t);
        CHECK(definiteness(cartan(catalog_graph(t))) == Definiteness::positive_semidefinite);
    }
}

TEST_CASE("cartan annihilates the canonical null vector") {
    for (const DiagramType& t : extended_catalog_upto(12)) {
        const Eigen::MatrixXi c = cartan(catalog_graph(t));
        const auto null_vec = canonical_null_vector(t);
        REQUIRE(static_cast<int>(null_vec.size()) == c.rows());
        int min_entry = null_vec[0];
        for (int x : null_vec) min_entry = std::min(min_entry, x);
        CHECK(min_entry == 1);
        for (int i = 0; i < c.rows(); ++i) {
            long s = 0;
            for (int j = 0; j < c.cols(); ++j) s += static_cast<long>(c(i, j)) * null_vec[j];
            CHECK(s == 0);
        }
    }
}

TEST_CASE("null vector squares recover the group orders") {
    auto order_of = [](DiagramFamily f, int p) {
        long s = 0;
        for (int x : canonical_null_vector({f, p})) s += static_cast<long>(x) * x;
        return s;
    };
    CHECK(order_of(DiagramFamily::ExtE, 6) == 24);
    CHECK(order_of(DiagramFamily::ExtE, 7) == 48);
    CHECK(order_of(DiagramFamily::ExtE, 8) == 120);
    CHECK(order_of(DiagramFamily::ExtA, 5) == 6);
    CHECK(order_of(DiagramFamily::ExtD, 6) == 16);

    CHECK(order_from_diagram(catalog_graph({DiagramFamily::ExtE, 8}), 2) == 120);
    CHECK(order_from_diagram(catalog_graph({DiagramFamily::ExtE, 7}), 2) == 48);
    CHECK(order_from_diagram(catalog_graph({DiagramFamily::ExtE, 6}), 2) == 24);
}

TEST_CASE("classification rejects near misses") {
    // path + extra edge making a triangle with a tail: indefinite
    Multigraph g(4);
    g.add(0, 1, 1);
    g.add(1, 2, 1);
    g.add(0, 2, 1);
    g.add(2, 3, 1);
    CHECK(classify(g) == DiagramType{DiagramFamily::Other, 0});
    CHECK(definiteness(cartan(g)) == Definiteness::indefinite);

    // triple edge: indefinite
    Multigraph t(2);
    t.add(0, 1, 3);
    CHECK(classify(t) == DiagramType{DiagramFamily::Other, 0});
    CHECK(definiteness(cartan(t)) == Definiteness::indefinite);

    // affine D4 star with a tail: proper supergraph of a Euclidean diagram
    Multigraph h(6);
    h.add(0, 1, 1);
    h.add(0, 2, 1);
    h.add(0, 3, 1);
    h.add(0, 4, 1);
    h.add(4, 5, 1);
    CHECK(classify(h) == DiagramType{DiagramFamily::Other, 0});
    CHECK(definiteness(cartan(h)) == Definiteness::indefinite);

    // loops are Other via classify_or_other
    Multigraph l(1);
    l.add(0, 0, 2);
    CHECK(classify_or_other(l) == DiagramType{DiagramFamily::Other, 0});
}

TEST_CASE("special small cases") {
    // ExtA(1) is the double edge; A(1) the single vertex; ExtA(2) the triangle
    Multigraph dbl(2);
    dbl.add(0, 1, 2);
    CHECK(classify(dbl) == DiagramType{DiagramFamily::ExtA, 1});
    CHECK(classify(Multigraph(1)) == DiagramType{DiagramFamily::A, 1});
    Multigraph tri(3);
    tri.add(0, 1, 1);
    tri.add(1, 2, 1);
    tri.add(0, 2, 1);
    CHECK(classify(tri) == DiagramType{DiagramFamily::ExtA, 2});
    // 4-star is affine D4
    Multigraph star(5);
    for (int leaf = 1; leaf <= 4; ++leaf) star.add(0, leaf, 1);
    CHECK(classify(star) == DiagramType{DiagramFamily::ExtD, 4});
    // the 6-vertex H tree (two adjacent branch vertices) is affine D5
    Multigraph h5(6);
    h5.add(0, 1, 1);
    h5.add(1, 2, 1);
    h5.add(2, 3, 1);
    h5.add(1, 4, 1);
    h5.add(2, 5, 1);
    CHECK(classify(h5) == DiagramType{DiagramFamily::ExtD, 5});
}

TEST_CASE("perron vector of a path") {
    Multigraph p(3);
    p.add(0, 1, 1);
    p.add(1, 2, 1);
    const EigenResult r = perron_vector(p);
    CHECK(r.eigenvalue == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(r.vector(0) == doctest::Approx(1.0));
    CHECK(r.vector(2) == doctest::Approx(1.0));
    CHECK(r.vector(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("eigenspace dimensions") {
    // two disjoint triangles: eigenvalue 2 with multiplicity 2
    Multigraph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        g.add(u, v, 1);
    CHECK(eigenspace_dim(g, 2.0) == 2);
    CHECK(eigenspace_dim(catalog_graph({DiagramFamily::ExtD, 7}), 2.0) == 1);
    CHECK(eigenspace_dim(catalog_graph({DiagramFamily::E, 8}), 2.0) == 0);
    // order_from_diagram requires a one-dimensional eigenspace
    CHECK_THROWS_AS(order_from_diagram(g, 2), NumericError);
}

TEST_CASE("definiteness routes agree on random graphs") {
    std::mt19937 rng(0xd1a6u);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add(u, v, 1 + static_cast<int>(rng() % 3));
        // definiteness() cross-checks the eigenvalue route against the
        // positive-vector route internally and throws on disagreement.
        const Definiteness d = definiteness(cartan(g));
        (void)d;
    }
}
