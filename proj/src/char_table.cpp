#include "mckay/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

using cd = std::complex<double>;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Sparse structure constants a_CDE = #{x in C : x^-1 z in D} for a fixed
// z in E: the class matrices (M_C)_{D,E} = a_CDE share eigenvectors whose
// entries are the central characters.
struct StructureConstants {
    int r = 0;
    // Triplets (D, E, count) per class C.
    std::vector<std::vector<std::array<int, 3>>> mats;
};

StructureConstants structure_constants(const FiniteSubgroup& g, const ConjugacyPartition& part) {
    const int r = part.size();
    const int n = g.order();
    // One packed entry ((C*r)+D)*r+E per group element and class E.
    std::vector<std::int64_t> packed;
    packed.reserve(static_cast<size_t>(r) * n);
    for (int E = 0; E < r; ++E) {
        const int z = part.representative[E];
        for (int x = 0; x < n; ++x) {
            const int C = part.class_of[x];
            const int D = part.class_of[g.mul(g.inverse(x), z)];
            packed.push_back((static_cast<std::int64_t>(C) * r + D) * r + E);
        }
    }
    std::sort(packed.begin(), packed.end());

    StructureConstants sc;
    sc.r = r;
    sc.mats.resize(r);
    for (size_t i = 0; i < packed.size();) {
        size_t j = i;
        while (j < packed.size() && packed[j] == packed[i]) ++j;
        const std::int64_t v = packed[i];
        const int E = static_cast<int>(v % r);
        const int D = static_cast<int>((v / r) % r);
        const int C = static_cast<int>(v / r / r);
        sc.mats[C].push_back({D, E, static_cast<int>(j - i)});
        i = j;
    }
    return sc;
}

struct RawTable {
    Eigen::MatrixXcd values; // chi_i(C), rows not yet in canonical order
    std::vector<int> degrees;
};

RawTable burnside_eigenvectors(const FiniteSubgroup& g, const ConjugacyPartition& part,
                               const StructureConstants& sc, std::uint64_t seed) {
    const int r = sc.r;
    const int n = g.order();
    std::mt19937_64 rng(seed);

    constexpr int kMaxRetries = 32;
    constexpr double kGapTol = 1e-6;
    constexpr double kResidualTol = 1e-6;

    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        // Random real combination of the class matrices.
        std::vector<double> t(r);
        for (double& v : t) v = uniform01(rng);
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(r, r);
        for (int C = 0; C < r; ++C)
            for (const auto& [D, E, cnt] : sc.mats[C]) M(D, E) += t[C] * cnt;

        Eigen::EigenSolver<Eigen::MatrixXd> es(M);
        if (es.info() != Eigen::Success) continue;
        const Eigen::VectorXcd lambda = es.eigenvalues();

        double min_gap = std::numeric_limits<double>::infinity();
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                min_gap = std::min(min_gap, std::abs(lambda(i) - lambda(j)));
        if (r > 1 && min_gap < kGapTol) continue; // collision: redraw

        Eigen::MatrixXcd V = es.eigenvectors(); // columns, unit norm

        // Residual check against every class matrix (on the unit-norm
        // eigenvectors): a simple eigenvalue of M shared by all M_C.
        Eigen::MatrixXcd omega(r, r); // omega(i, C)
        bool ok = true;
        // Extract omega first: with v scaled so v[identity class] = 1, the
        // eigenvector entries are the central characters themselves.
        for (int i = 0; i < r && ok; ++i) {
            const cd pivot = V(0, i); // class 0 is the identity class
            if (std::abs(pivot) < 1e-9) { ok = false; break; }
            for (int C = 0; C < r; ++C) omega(i, C) = V(C, i) / pivot;
        }
        if (ok) {
            Eigen::MatrixXcd R(r, r);
            for (int C = 0; C < r && ok; ++C) {
                R.setZero();
                for (const auto& [D, E, cnt] : sc.mats[C])
                    R.row(D) += static_cast<double>(cnt) * V.row(E);
                // M_C v_i should equal omega_i(C) v_i.
                for (int i = 0; i < r && ok; ++i) {
                    const cd w = omega(i, C);
                    if ((R.col(i) - w * V.col(i)).norm() >= kResidualTol) ok = false;
                }
            }
        }
        if (!ok) continue;

        // Degrees d_i = sqrt(|G| / sum_C |omega_i(C)|^2 / |C|), snapped.
        RawTable out;
        out.values.resize(r, r);
        out.degrees.resize(r);
        for (int i = 0; i < r; ++i) {
            double s = 0.0;
            for (int C = 0; C < r; ++C)
                s += std::norm(omega(i, C)) / part.class_size(C);
            const double d = std::sqrt(static_cast<double>(n) / s);
            const double rd = std::round(d);
            if (std::fabs(d - rd) >= 1e-6 || rd < 1.0)
                throw NumericError("character_table: degree failed to snap to a positive integer");
            out.degrees[i] = static_cast<int>(rd);
            for (int C = 0; C < r; ++C)
                out.values(i, C) = static_cast<double>(out.degrees[i]) * omega(i, C) /
                                   static_cast<double>(part.class_size(C));
        }
        return out;
    }
    throw NumericError("character_table: eigenvalue separation retries exhausted");
}

} // namespace

CharacterTable character_table(const FiniteSubgroup& g, const ConjugacyPartition& part,
                               std::uint64_t seed) {
    const int r = part.size();
    const auto sc = structure_constants(g, part);
    RawTable raw = burnside_eigenvectors(g, part, sc, seed);

    std::vector<int> parity;
    const bool has_m1 = g.minus_one_index.has_value();
    int m1_class = -1;
    if (has_m1) {
        m1_class = part.class_of[*g.minus_one_index];
        parity.resize(r);
        for (int i = 0; i < r; ++i) {
            const double ratio = raw.values(i, m1_class).real() / raw.degrees[i];
            const double imag = raw.values(i, m1_class).imag();
            if (std::fabs(imag) >= 1e-6 || std::fabs(std::fabs(ratio) - 1.0) >= 1e-6)
                throw NumericError("character_table: chi(-1) is not +-chi(1)");
            parity[i] = ratio > 0 ? 1 : -1;
        }
    }

    // Canonical row order: ascending degree, then parity (+1 first) when
    // defined, then lexicographic on rounded values.
    std::vector<std::vector<std::int64_t>> keys(r);
    for (int i = 0; i < r; ++i) {
        auto& k = keys[i];
        k.push_back(raw.degrees[i]);
        k.push_back(has_m1 ? (parity[i] == 1 ? 0 : 1) : 0);
        for (int C = 0; C < r; ++C) {
            k.push_back(std::llround(raw.values(i, C).real() * 1e6));
            k.push_back(std::llround(raw.values(i, C).imag() * 1e6));
        }
    }
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });

    CharacterTable table;
    table.values.resize(r, r);
    table.degrees.resize(r);
    for (int i = 0; i < r; ++i) {
        table.values.row(i) = raw.values.row(order[i]);
        table.degrees[i] = raw.degrees[order[i]];
        if (has_m1) table.parity.push_back(parity[order[i]]);
    }
    for (int C = 0; C < r; ++C) table.class_sizes.push_back(part.class_size(C));

    // Locate the trivial row (all values 1).
    for (int i = 0; i < r; ++i) {
        if (table.degrees[i] != 1) continue;
        double dev = 0.0;
        for (int C = 0; C < r; ++C) dev = std::max(dev, std::abs(table.values(i, C) - cd(1, 0)));
        if (dev < 1e-6) {
            if (table.trivial_row != -1)
                throw NumericError("character_table: multiple trivial rows");
            table.trivial_row = i;
        }
    }
    if (table.trivial_row == -1) throw NumericError("character_table: trivial row not found");

    // Sum of squared degrees must recover |G| exactly.
    long sum_sq = 0;
    for (int d : table.degrees) sum_sq += static_cast<long>(d) * d;
    if (sum_sq != g.order())
        throw NumericError("character_table: degree squares do not sum to |G|");

    // Row orthogonality within 1e-6.
    Eigen::VectorXd w(r);
    for (int C = 0; C < r; ++C) w(C) = static_cast<double>(part.class_size(C)) / g.order();
    Eigen::MatrixXcd gram = table.values * w.asDiagonal() * table.values.adjoint();
    gram -= Eigen::MatrixXcd::Identity(r, r);
    if (gram.cwiseAbs().maxCoeff() >= 1e-6)
        throw NumericError("character_table: row orthogonality violated");

    return table;
}

std::complex<double> inner_product(const ClassFunction& x, const ClassFunction& y,
                                   const FiniteSubgroup& g, const ConjugacyPartition& part) {
    const int r = part.size();
    if (x.values.size() != r || y.values.size() != r)
        throw UsageError("inner_product: class function size mismatch");
    cd s = 0.0;
    for (int C = 0; C < r; ++C)
        s += static_cast<double>(part.class_size(C)) * x.values(C) * std::conj(y.values(C));
    return s / static_cast<double>(g.order());
}

int inner_product_int(const ClassFunction& x, const ClassFunction& y,
                      const FiniteSubgroup& g, const ConjugacyPartition& part, double tol) {
    const cd v = inner_product(x, y, g, part);
    const double rv = std::round(v.real());
    if (std::fabs(v.imag()) >= tol || std::fabs(v.real() - rv) >= tol)
        throw NumericError("inner_product: value is not integral within tolerance");
    return static_cast<int>(rv);
}

ClassFunction natural_character(const FiniteSubgroup& g, const ConjugacyPartition& part,
                                NaturalFactor factor) {
    if (g.ambient == Ambient::SU2 && factor != NaturalFactor::W1)
        throw UsageError("natural_character: SU(2) groups only have factor 1");
    const int r = part.size();
    ClassFunction f;
    f.values.resize(r);
    for (int C = 0; C < r; ++C) {
        const auto& e = g.elements[part.representative[C]];
        double v = 0.0;
        if (factor == NaturalFactor::W1 || factor == NaturalFactor::Both) v += su2_trace(e.q1);
        if (factor == NaturalFactor::W2 || factor == NaturalFactor::Both) v += su2_trace(e.q2);
        f.values(C) = v;
    }
    return f;
}

int minus_one_parity(int row, const FiniteSubgroup& g, const ConjugacyPartition& part,
                     const CharacterTable& table) {
    if (!g.minus_one_index) throw UsageError("minus_one_parity: -1 is not in G");
    const int m1_class = part.class_of[*g.minus_one_index];
    const cd v = table.values(row, m1_class);
    const double d = table.degrees[row];
    if (std::abs(v - cd(d, 0)) < 1e-6) return 1;
    if (std::abs(v + cd(d, 0)) < 1e-6) return -1;
    throw NumericError("minus_one_parity: chi(-1) is neither +chi(1) nor -chi(1)");
}

} // namespace mckay
