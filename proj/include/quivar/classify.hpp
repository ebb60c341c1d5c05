#pragma once

#include "quivar/decompose.hpp"

#include <array>
#include <vector>

namespace quivar {

/// Extended Dynkin quiver of a singularity's type together with the dimension
/// vector (1, n_1, ..., n_k) of the slice representation space.
struct SliceQuiver {
    ExtendedDiagram diagram;
    Quiver quiver; // orientation: low vertex -> high vertex
    IntVec delta_prime;
};

/// One singular point of the (0,lambda) quiver variety at dimension delta:
/// a component of the orthogonal slice decomposition, with the dimension
/// vectors of the simple summands and the local model data.
struct SingularPoint {
    ComponentBase component;
    ADEType adtype;
    GroupDescriptor mckay;
    IntVec gamma0;              // (1, d - beta)
    std::vector<IntVec> gammas; // (0, alpha_t), canonical base order
    IntVec multiplicities;      // n_t
    IntVec stabilizer_blocks;   // (1, n_1, ..., n_k), the U(n_j) block sizes
    SliceQuiver slice;
};

struct Classification {
    Parameter lambda; // length n+1, lambda . delta = 0
    bool regular_nonempty;
    std::vector<SingularPoint> points;
};

/// Sigma_lambda = {a in Sigma : a . lambda = 0}, exact filter.
std::vector<IntVec> sigma_lambda(const ExtendedDiagram& ed, const Parameter& lambda);

/// Elements of Sigma_lambda admitting no decomposition as a sum of two or
/// more elements of Sigma_lambda; computed by a reachable-sum table over the
/// coordinatewise box [0, delta].
std::vector<IntVec> sigma_lambda_min(const ExtendedDiagram& ed,
                                     const std::vector<IntVec>& sigma_lambda_set);

/// Existence of a simple module of dimension alpha (0 < alpha <= delta):
/// for alpha = delta this is lambda . delta = 0; below delta it is membership
/// in Sigma_lambda^min. Non-roots yield false.
bool simple_exists(const ExtendedDiagram& ed, const IntVec& alpha, const Parameter& lambda);

SliceQuiver slice_quiver(const ComponentBase& component, const RootSystem& rs);

/// Classify the singular points for lambda with lambda . delta = 0 (throws
/// std::domain_error otherwise). Writes lambda = (lambda_1, tau) and pairs the
/// singular points with the components of the tau-slice decomposition.
Classification classify_singularities(const ExtendedDiagram& ed, const Parameter& lambda);

/// Convenience entry point: lambda := psi*(tau).
Classification classify_tau(const ExtendedDiagram& ed, const Parameter& tau);

/// R_+(v) = {theta : 0 < theta < v, (theta,theta) <= 2} by box enumeration.
std::vector<IntVec> r_plus(const ExtendedDiagram& ed, const IntVec& v);

/// True iff xi lies in R^3 (x) D_v and off every wall D_theta, theta in R_+(v).
bool is_generic(const ExtendedDiagram& ed, const std::array<std::vector<Rational>, 3>& xi,
                const IntVec& v);

} // namespace quivar
