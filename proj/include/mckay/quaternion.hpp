#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <functional>

namespace mckay {

// A quaternion a + bi + cj + dk.  Every quaternion stored in a group is kept
// at unit norm, so it represents an element of SU(2) via
//   q  ->  [ a+bi  c+di ]
//          [-c+di  a-bi ]
struct Quaternion {
    double a = 1.0, b = 0.0, c = 0.0, d = 0.0;
};

inline constexpr Quaternion kQOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kQI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQK{0.0, 0.0, 0.0, 1.0};

inline double norm(const Quaternion& q) {
    return std::sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d);
}

inline Quaternion normalized(const Quaternion& q) {
    const double n = norm(q);
    return {q.a / n, q.b / n, q.c / n, q.d / n};
}

// Hamilton product, renormalized to suppress floating-point drift.
inline Quaternion qmul(const Quaternion& x, const Quaternion& y) {
    Quaternion p{
        x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
        x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
        x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
        x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a,
    };
    return normalized(p);
}

inline Quaternion conjugate(const Quaternion& q) {
    return {q.a, -q.b, -q.c, -q.d};
}

// Trace of the SU(2) matrix of a unit quaternion.
inline double su2_trace(const Quaternion& q) {
    return 2.0 * q.a;
}

inline double max_coord_dist(const Quaternion& x, const Quaternion& y) {
    double m = std::fabs(x.a - y.a);
    m = std::max(m, std::fabs(x.b - y.b));
    m = std::max(m, std::fabs(x.c - y.c));
    m = std::max(m, std::fabs(x.d - y.d));
    return m;
}

// A group element of SU(2) x SU(2).  Elements of a plain SU(2) group are
// embedded with the identity in the second slot.
struct UnitQuaternionPair {
    Quaternion q1, q2;
};

inline constexpr UnitQuaternionPair kPairOne{kQOne, kQOne};

inline UnitQuaternionPair pair_mul(const UnitQuaternionPair& x, const UnitQuaternionPair& y) {
    return {qmul(x.q1, y.q1), qmul(x.q2, y.q2)};
}

inline UnitQuaternionPair pair_inverse(const UnitQuaternionPair& x) {
    return {conjugate(x.q1), conjugate(x.q2)};
}

inline double max_coord_dist(const UnitQuaternionPair& x, const UnitQuaternionPair& y) {
    return std::max(max_coord_dist(x.q1, y.q1), max_coord_dist(x.q2, y.q2));
}

inline std::array<double, 8> coords(const UnitQuaternionPair& p) {
    return {p.q1.a, p.q1.b, p.q1.c, p.q1.d, p.q2.a, p.q2.b, p.q2.c, p.q2.d};
}

// Grid key for identifying elements under floating-point noise: each
// coordinate is rounded to the nearest multiple of `grid`.  Two pairs within
// max-coordinate distance < grid/2 of the same grid point share a key; lookup
// structures probe neighboring cells to cover points near cell boundaries.
struct GridKey {
    std::array<std::int64_t, 8> cell;
    bool operator==(const GridKey&) const = default;
};

inline GridKey canonical_key(const UnitQuaternionPair& p, double grid) {
    const auto c = coords(p);
    GridKey k;
    for (std::size_t i = 0; i < 8; ++i) k.cell[i] = std::llround(c[i] / grid);
    return k;
}

struct GridKeyHash {
    std::size_t operator()(const GridKey& k) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::int64_t v : k.cell) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace mckay
