#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "mckay/errors.hpp"
#include "mckay/group.hpp"

using namespace mckay;

namespace {

std::vector<int> sorted_class_sizes(const FiniteSubgroup& g) {
    const ConjugacyPartition part = conjugacy_classes(g);
    std::vector<int> sizes;
    for (int k = 0; k < part.size(); ++k) sizes.push_back(part.class_size(k));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

// Smallest pairwise max-coordinate distance, by brute force.
double min_separation(const FiniteSubgroup& g) {
    double best = 10.0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            best = std::min(best, max_coord_dist(g.elements[i], g.elements[j]));
    return best;
}

} // namespace

TEST_CASE("cyclic groups") {
    const FiniteSubgroup c6 = cyclic(6);
    CHECK(c6.order() == 6);
    CHECK(c6.ambient == Ambient::SU2);
    CHECK(c6.identity_index == 0);
    REQUIRE(c6.minus_one_index.has_value());

    // the generator has order 6
    REQUIRE(c6.generator_indices.size() == 1);
    int x = c6.identity_index;
    const int gen = c6.generator_indices[0];
    for (int k = 0; k < 6; ++k) x = c6.mul(x, gen);
    CHECK(x == c6.identity_index);

    CHECK_FALSE(cyclic(5).minus_one_index.has_value());
    CHECK(cyclic(1).order() == 1);
    // every element of a cyclic group is its own class
    CHECK(conjugacy_classes(cyclic(7)).size() == 7);

    CHECK_THROWS_AS(cyclic(0), UsageError);
    CHECK_THROWS_AS(cyclic(1025), UsageError);
}

TEST_CASE("binary dihedral groups") {
    const FiniteSubgroup d3 = binary_dihedral(3);
    CHECK(d3.order() == 12);
    REQUIRE(d3.minus_one_index.has_value());
    // inverse table is consistent
    for (int i = 0; i < d3.order(); ++i)
        CHECK(d3.mul(i, d3.inverse(i)) == d3.identity_index);
    // dicyclic group of order 12: class sizes 1,1,2,2,3,3
    CHECK(sorted_class_sizes(d3) == std::vector<int>{1, 1, 2, 2, 3, 3});

    CHECK(binary_dihedral(1).order() == 4);
    CHECK(binary_dihedral(12).order() == 48);
    CHECK_THROWS_AS(binary_dihedral(0), UsageError);
}

TEST_CASE("binary polyhedral groups") {
    const FiniteSubgroup t = binary_tetrahedral();
    CHECK(t.order() == 24);
    CHECK(conjugacy_classes(t).size() == 7);
    CHECK(sorted_class_sizes(t) == std::vector<int>{1, 1, 4, 4, 4, 4, 6});

    const FiniteSubgroup o = binary_octahedral();
    CHECK(o.order() == 48);
    CHECK(conjugacy_classes(o).size() == 8);
    CHECK(sorted_class_sizes(o) == std::vector<int>{1, 1, 6, 6, 6, 8, 8, 12});

    const FiniteSubgroup i = binary_icosahedral();
    CHECK(i.order() == 120);
    CHECK(conjugacy_classes(i).size() == 9);
    CHECK(sorted_class_sizes(i) == std::vector<int>{1, 1, 12, 12, 12, 12, 20, 20, 30});

    REQUIRE(t.minus_one_index.has_value());
    REQUIRE(o.minus_one_index.has_value());
    REQUIRE(i.minus_one_index.has_value());
}

TEST_CASE("icosian units are well separated") {
    // the 1e-3 identification grid needs real clearance between elements
    CHECK(min_separation(binary_icosahedral()) > 0.3);
    CHECK(min_separation(binary_octahedral()) > 0.49);
}

TEST_CASE("products and diagonals") {
    const FiniteSubgroup p = product(cyclic(4), binary_tetrahedral());
    CHECK(p.order() == 96);
    CHECK(p.ambient == Ambient::SU2xSU2);
    CHECK(p.minus_one_index.has_value()); // (-1,-1) since both factors contain -1

    const FiniteSubgroup podd = product(cyclic(3), cyclic(5));
    CHECK(podd.order() == 15);
    CHECK_FALSE(podd.minus_one_index.has_value());

    const FiniteSubgroup d = diagonal(binary_tetrahedral());
    CHECK(d.order() == 24);
    CHECK(d.ambient == Ambient::SU2xSU2);
    for (const auto& e : d.elements) CHECK(max_coord_dist(e.q1, e.q2) < 1e-12);

    // factors must live in SU(2)
    CHECK_THROWS_AS(product(p, cyclic(2)), UsageError);
    CHECK_THROWS_AS(diagonal(p), UsageError);
    // order cap
    CHECK_THROWS_AS(product(cyclic(1024), cyclic(24)), UsageError);
}

TEST_CASE("generator closure") {
    // <i, omega> is the binary tetrahedral group
    const std::vector<UnitQuaternionPair> gens{
        {kQI, kQOne}, {Quaternion{0.5, 0.5, 0.5, 0.5}, kQOne}};
    const FiniteSubgroup g = from_generators(gens, kClosureCap);
    CHECK(g.order() == 24);
    CHECK(g.ambient == Ambient::SU2);
    CHECK(g.minus_one_index.has_value());

    // closure respects the cap
    CHECK_THROWS_AS(from_generators(gens, 10), UsageError);
    // generators must be unit quaternions
    CHECK_THROWS_AS(from_generators({{Quaternion{0.5, 0, 0, 0}, kQOne}}, 100), UsageError);
}

TEST_CASE("conjugacy classes partition the group") {
    const FiniteSubgroup g = binary_octahedral();
    const ConjugacyPartition part = conjugacy_classes(g);
    std::set<int> seen;
    int total = 0;
    for (const auto& cls : part.classes) {
        for (int e : cls) {
            CHECK(seen.insert(e).second);
            ++total;
        }
    }
    CHECK(total == g.order());
    CHECK(part.classes[0] == std::vector<int>{g.identity_index});
    // class_of agrees with the class lists
    for (int k = 0; k < part.size(); ++k)
        for (int e : part.classes[k]) CHECK(part.class_of[e] == k);
    // conjugation preserves classes
    for (int k = 0; k < part.size(); ++k) {
        const int rep = part.representative[k];
        for (int h = 0; h < g.order(); h += 7)
            CHECK(part.class_of[g.mul(g.mul(g.inverse(h), rep), h)] == k);
    }
}

TEST_CASE("central minus one") {
    CHECK(central_minus_one(binary_icosahedral()).has_value());
    CHECK_FALSE(central_minus_one(cyclic(9)).has_value());
    CHECK(central_minus_one(product(cyclic(2), cyclic(2))).has_value());
    CHECK_FALSE(central_minus_one(product(cyclic(2), cyclic(7))).has_value());
}
