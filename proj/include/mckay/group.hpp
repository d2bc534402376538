#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mckay/quaternion.hpp"

namespace mckay {

enum class Ambient { SU2, SU2xSU2 };

// Spatial hash from quaternion pairs to element indices.  Matching tolerance
// is 1e-6 in max-coordinate distance; the grid is coarser (1e-3) and lookups
// probe adjacent cells when a coordinate lies near a cell boundary.
class PointIndex {
public:
    explicit PointIndex(double grid = 1e-3, double match_tol = 1e-6)
        : grid_(grid), match_tol_(match_tol) {}

    void insert(const UnitQuaternionPair& p, int index);
    std::optional<int> find(const UnitQuaternionPair& p) const;
    double match_tol() const { return match_tol_; }

private:
    double grid_;
    double match_tol_;
    std::vector<UnitQuaternionPair> points_;
    std::unordered_map<GridKey, std::vector<int>, GridKeyHash> cells_;
};

// A finite subgroup of SU(2) or SU(2) x SU(2), stored as an explicit closed
// element list.  Element 0 is the identity.  Immutable once built.
class FiniteSubgroup {
public:
    Ambient ambient = Ambient::SU2;
    std::vector<UnitQuaternionPair> elements;
    std::vector<int> generator_indices;
    int identity_index = 0;
    std::optional<int> minus_one_index;

    int order() const { return static_cast<int>(elements.size()); }

    std::optional<int> find(const UnitQuaternionPair& p) const { return index_.find(p); }

    // Index of elements[i] * elements[j]; the product must be in the group.
    int mul(int i, int j) const;
    int inverse(int i) const { return inverse_[i]; }

    friend FiniteSubgroup finalize_group(std::vector<UnitQuaternionPair> elems,
                                         std::vector<UnitQuaternionPair> gens,
                                         Ambient ambient, const std::string& what);

private:
    PointIndex index_;
    std::vector<int> inverse_;
};

// Conjugacy classes of a FiniteSubgroup.  Class 0 is the class of the
// identity; classes are listed in order of their smallest element index and
// each class lists its element indices in ascending order.
struct ConjugacyPartition {
    std::vector<std::vector<int>> classes;
    std::vector<int> representative; // classes[k].front()
    std::vector<int> class_of;       // element index -> class index

    int size() const { return static_cast<int>(classes.size()); }
    int class_size(int k) const { return static_cast<int>(classes[k].size()); }
};

// The five SU(2) families.
FiniteSubgroup cyclic(int n);                 // order n, 1 <= n <= 1024
FiniteSubgroup binary_dihedral(int n);        // order 4n, 1 <= n <= 256
FiniteSubgroup binary_tetrahedral();          // order 24
FiniteSubgroup binary_octahedral();           // order 48
FiniteSubgroup binary_icosahedral();          // order 120

// SU(2) x SU(2) constructions.
FiniteSubgroup product(const FiniteSubgroup& g1, const FiniteSubgroup& g2);
FiniteSubgroup diagonal(const FiniteSubgroup& g);
FiniteSubgroup from_generators(const std::vector<UnitQuaternionPair>& gens, int cap);

ConjugacyPartition conjugacy_classes(const FiniteSubgroup& g);
std::optional<int> central_minus_one(const FiniteSubgroup& g);

inline constexpr int kClosureCap = 20000;

} // namespace mckay
