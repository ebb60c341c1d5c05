#pragma once

#include "quivar/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quivar {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail; // empty when passed
};

/// Self-check suite: cross-checks the two root enumeration routes, the psi
/// bijection, the subgraph decomposition oracle, the classification sum
/// rules and the homological identities on the built-in fixtures.
/// `only` restricts the per-type checks to one type.
std::vector<CheckResult> run_verification(std::optional<ADEType> only = std::nullopt);

} // namespace quivar
