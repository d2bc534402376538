#pragma once

#include <memory>
#include <string>

#include "mckay/group.hpp"

namespace mckay {

// Abstract syntax of the group mini-language:
//   spec   := family | "prod(" spec "," spec ")" | "diag(" family ")" | "gens:" path
//   family := "C" int | "D" int | "2T" | "2O" | "2I"
// "Dn" is the binary dihedral group of order 4n.  Whitespace-insensitive.
struct GroupSpec {
    enum class Kind { Family, Prod, Diag, Gens };
    Kind kind = Kind::Family;
    char family = 0;   // 'C', 'D', 'T', 'O', 'I'
    int n = 0;         // parameter for C/D
    std::unique_ptr<GroupSpec> left, right; // Prod children; Diag child in left
    std::string path;  // Gens

    GroupSpec() = default;
    GroupSpec(GroupSpec&&) = default;
    GroupSpec& operator=(GroupSpec&&) = default;
};

// Parses the mini-language; throws UsageError with a character offset on
// syntax errors.
GroupSpec parse_spec(const std::string& text);

std::string to_string(const GroupSpec& spec);

// Builds the group a spec denotes.  Prod/Diag arguments must resolve to
// ambient-SU2 groups; gens: reads a JSON file {"pairs": [[8 floats]...]}.
FiniteSubgroup build_group(const GroupSpec& spec);

} // namespace mckay
