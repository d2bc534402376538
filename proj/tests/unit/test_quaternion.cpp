#include "doctest.h"
#include "mckay/quaternion.hpp"

using namespace mckay;

TEST_CASE("hamilton product basics") {
    // i*j = k and j*i = -k
    const Quaternion ij = qmul(kQI, kQJ);
    CHECK(max_coord_dist(ij, kQK) < 1e-12);
    const Quaternion ji = qmul(kQJ, kQI);
    CHECK(max_coord_dist(ji, Quaternion{0, 0, 0, -1}) < 1e-12);

    // omega = (1+i+j+k)/2 squares to (-1+i+j+k)/2, worked out by hand from
    // the product formula.
    const Quaternion omega{0.5, 0.5, 0.5, 0.5};
    const Quaternion omega2 = qmul(omega, omega);
    CHECK(max_coord_dist(omega2, Quaternion{-0.5, 0.5, 0.5, 0.5}) < 1e-12);
    // omega has order 6: omega^3 = -1
    const Quaternion omega3 = qmul(omega2, omega);
    CHECK(max_coord_dist(omega3, Quaternion{-1, 0, 0, 0}) < 1e-12);
}

TEST_CASE("conjugate inverts unit quaternions") {
    const Quaternion q = normalized(Quaternion{0.3, -1.2, 0.5, 2.0});
    CHECK(max_coord_dist(qmul(q, conjugate(q)), kQOne) < 1e-12);
    CHECK(norm(q) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("su2 trace") {
    CHECK(su2_trace(kQOne) == 2.0);
    CHECK(su2_trace(kQI) == 0.0);
    CHECK(su2_trace(Quaternion{0.5, 0.5, 0.5, 0.5}) == 1.0);
}

TEST_CASE("grid keys identify nearby points") {
    const UnitQuaternionPair p{kQI, kQOne};
    UnitQuaternionPair q = p;
    q.q1.b += 2e-7; // well inside the 1e-3 grid cell
    q.q1.a += 1e-7;
    CHECK(canonical_key(p, 1e-3) == canonical_key(q, 1e-3));

    UnitQuaternionPair far{kQJ, kQOne};
    CHECK_FALSE(canonical_key(p, 1e-3) == canonical_key(far, 1e-3));
}

TEST_CASE("pair algebra acts coordinatewise") {
    const UnitQuaternionPair x{kQI, kQJ};
    const UnitQuaternionPair y{kQJ, kQK};
    const UnitQuaternionPair xy = pair_mul(x, y);
    CHECK(max_coord_dist(xy.q1, kQK) < 1e-12);
    CHECK(max_coord_dist(xy.q2, kQI) < 1e-12);
    const UnitQuaternionPair e = pair_mul(x, pair_inverse(x));
    CHECK(max_coord_dist(e, kPairOne) < 1e-12);
}
