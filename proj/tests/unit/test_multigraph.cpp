#include <vector>

#include "doctest.h"
#include "mckay/errors.hpp"
#include "mckay/multigraph.hpp"

using namespace mckay;

namespace {

Multigraph path(int n) {
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add(i, i + 1, 1);
    return g;
}

Multigraph cycle(int n) {
    Multigraph g = path(n);
    g.add(0, n - 1, 1);
    return g;
}

} // namespace

TEST_CASE("multigraph storage") {
    Multigraph g(3);
    g.add(2, 0, 2); // stored as (0,2)
    g.add(1, 1, 1); // loop
    CHECK(g.mult(0, 2) == 2);
    CHECK(g.mult(2, 0) == 2);
    CHECK(g.mult(0, 1) == 0);
    CHECK(g.has_loops());
    CHECK(g.edge_count() == 3);
    CHECK(g.degrees() == std::vector<int>{2, 2, 2}); // loop counts twice

    const auto a = g.adjacency_int();
    CHECK(a(0, 2) == 2);
    CHECK(a(2, 0) == 2);
    CHECK(a(1, 1) == 1); // multiplicity, not doubled

    CHECK_THROWS_AS(g.add(0, 3, 1), Error);
    CHECK_THROWS_AS(g.add(-1, 0, 1), Error);
}

TEST_CASE("components") {
    Multigraph g(6);
    g.add(0, 2, 1);
    g.add(2, 4, 1);
    g.add(1, 5, 3);
    const auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 2, 4});
    CHECK(comps[1] == std::vector<int>{1, 5});
    CHECK(comps[2] == std::vector<int>{3}); // isolated

    const Multigraph sub = induced(g, comps[0]);
    CHECK(sub.n == 3);
    CHECK(sub.mult(0, 1) == 1); // 0-2 renumbered
    CHECK(sub.mult(1, 2) == 1); // 2-4 renumbered
    CHECK(sub.mult(0, 2) == 0);
}

TEST_CASE("isomorphism finds relabelings") {
    Multigraph a(4);
    a.add(0, 1, 1);
    a.add(1, 2, 1);
    a.add(1, 3, 1); // star with center 1
    Multigraph b(4);
    b.add(3, 0, 1);
    b.add(3, 1, 1);
    b.add(3, 2, 1); // star with center 3
    const auto iso = multigraph_isomorphism(a, b);
    REQUIRE(iso.has_value());
    CHECK((*iso)[1] == 3);
    // the map transports multiplicities
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(a.mult(u, v) == b.mult((*iso)[u], (*iso)[v]));
}

TEST_CASE("isomorphism rejections") {
    CHECK_FALSE(multigraph_isomorphism(path(3), cycle(3)).has_value());
    // multiplicities matter: double edge vs two-edge path
    Multigraph dbl(2);
    dbl.add(0, 1, 2);
    CHECK_FALSE(multigraph_isomorphism(dbl, path(2)).has_value());
    Multigraph dbl2(2);
    dbl2.add(0, 1, 2);
    CHECK(multigraph_isomorphism(dbl, dbl2).has_value());
    // same degree sequence, different structure: C6 vs two triangles
    Multigraph two_triangles(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_triangles.add(u, v, 1);
    CHECK_FALSE(multigraph_isomorphism(cycle(6), two_triangles).has_value());
}

TEST_CASE("bipartition") {
    const auto even = bipartition(cycle(6));
    REQUIRE(even.has_value());
    CHECK((*even)[0] == std::vector<int>{0, 2, 4});
    CHECK((*even)[1] == std::vector<int>{1, 3, 5});
    CHECK_FALSE(bipartition(cycle(5)).has_value());

    Multigraph loop(1);
    loop.add(0, 0, 1);
    CHECK_FALSE(bipartition(loop).has_value());

    // disconnected graphs are colored per component
    Multigraph g(4);
    g.add(0, 1, 2);
    g.add(2, 3, 1);
    const auto parts = bipartition(g);
    REQUIRE(parts.has_value());
    CHECK((*parts)[0].size() + (*parts)[1].size() == 4);
}
