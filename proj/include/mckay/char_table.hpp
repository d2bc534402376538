#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "mckay/group.hpp"

namespace mckay {

// A function constant on conjugacy classes; values indexed by class.
struct ClassFunction {
    Eigen::VectorXcd values;
};

// Irreducible character table.  Rows are irreducibles in a canonical order
// (ascending degree, then parity with +1 first when defined, then
// lexicographically by rounded values); columns are conjugacy classes in
// partition order.
struct CharacterTable {
    Eigen::MatrixXcd values;       // r x r
    std::vector<int> degrees;      // chi_i(1), positive integers
    std::vector<int> class_sizes;  // |C| per column
    int trivial_row = -1;
    std::vector<int> parity;       // +1/-1 per row; empty when -1 is not in G

    int r() const { return static_cast<int>(degrees.size()); }
    ClassFunction row(int i) const { return {values.row(i).transpose()}; }
    bool has_parity() const { return !parity.empty(); }
};

// Burnside class-matrix method: common eigenvectors of the class matrices
// give the central characters, from which degrees and character values are
// recovered and snapped to the required integrality.
CharacterTable character_table(const FiniteSubgroup& g, const ConjugacyPartition& part,
                               std::uint64_t seed = 0);

// Hermitian inner product (1/|G|) sum_C |C| x(C) conj(y(C)).
std::complex<double> inner_product(const ClassFunction& x, const ClassFunction& y,
                                   const FiniteSubgroup& g, const ConjugacyPartition& part);

// Same, snapped to a (real) integer; throws NumericError when off by >= tol.
int inner_product_int(const ClassFunction& x, const ClassFunction& y,
                      const FiniteSubgroup& g, const ConjugacyPartition& part,
                      double tol = 1e-6);

enum class NaturalFactor { W1, W2, Both };

// Character of the natural representation: trace of the first and/or second
// SU(2) component at a class representative.
ClassFunction natural_character(const FiniteSubgroup& g, const ConjugacyPartition& part,
                                NaturalFactor factor);

// +1 when chi_i(-1) = chi_i(1), -1 when chi_i(-1) = -chi_i(1).
int minus_one_parity(int row, const FiniteSubgroup& g, const ConjugacyPartition& part,
                     const CharacterTable& table);

} // namespace mckay
