#pragma once

#include "quivar/roots.hpp"

#include <utility>
#include <vector>

namespace quivar {

/// The roots of the ambient system orthogonal (standard scalar product) to
/// both the real and imaginary parts of tau. Membership is exact.
struct OrthogonalSlice {
    Parameter tau;
    std::vector<IntVec> roots;     // sorted lexicographically
    std::vector<IntVec> positives; // sorted lexicographically
};

/// One irreducible piece of the slice: its unique positive base in canonical
/// label order, the highest root beta of the subsystem, and the coefficients
/// of beta over the base.
struct ComponentBase {
    ADEType adtype;
    std::vector<IntVec> base;
    IntVec maximal;
    IntVec multiplicities;
};

OrthogonalSlice orthogonal_roots(const RootSystem& rs, const Parameter& tau);

/// The positive slice roots admitting no two-term decomposition inside the
/// positive slice. This is the unique base of the slice subsystem.
std::vector<IntVec> minimal_base(const OrthogonalSlice& slice);

/// ADE shape of a connected base graph (edges where the pairing is -1).
ADEType identify_type(const RootSystem& rs, const std::vector<IntVec>& base);

/// Reflection closure of a base inside the ambient lattice; the roots of the
/// subsystem the base generates.
std::vector<IntVec> subsystem_roots(const RootSystem& rs, const std::vector<IntVec>& base);

/// Highest root of the subsystem generated by a linearly independent base,
/// together with its (unique, positive, integral) coefficient vector.
std::pair<IntVec, IntVec> component_data(const RootSystem& rs,
                                         const std::vector<IntVec>& base);

/// Split a base into pairwise orthogonal connected pieces, type each piece and
/// compute its highest-root data. Components are ordered by their smallest
/// base root.
std::vector<ComponentBase> split_components(const RootSystem& rs,
                                            const std::vector<IntVec>& base);

/// Full pipeline: slice, base, components.
std::vector<ComponentBase> decompose(const RootSystem& rs, const Parameter& tau);

} // namespace quivar
