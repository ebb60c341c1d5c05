#pragma once

#include "quivar/roots.hpp"

#include <optional>
#include <vector>

namespace quivar {

/// A boundary configuration: the type at infinity and the multiset of types
/// requested at the finite ends.
struct Configuration {
    ADEType base;
    std::vector<ADEType> parts; // multiset, kept sorted
};

/// Type multiset of the induced subgraph on J, sorted canonically.
std::vector<ADEType> subgraph_types(const Diagram& d, const std::vector<int>& J);

/// Search all vertex subsets of the base diagram for one inducing the
/// requested component multiset; returns the lexicographically least such
/// subset, or nullopt.
std::optional<std::vector<int>> realizable(const Configuration& cfg);

/// lambda = psi*(tau) for the 0/1 parameter with tau_j = 1 exactly when j is
/// outside J; classifying at this lambda reproduces the components of the
/// induced subgraph on J.
Parameter witness_parameter(ADEType base, const std::vector<int>& J);

/// All distinct component-type multisets over the 2^n vertex subsets.
std::vector<std::vector<ADEType>> enumerate_configurations(ADEType base);

} // namespace quivar
