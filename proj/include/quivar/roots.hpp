#pragma once

#include "quivar/diagram.hpp"
#include "quivar/linalg.hpp"
#include "quivar/rational.hpp"
#include "quivar/types.hpp"

#include <vector>

namespace quivar {

/// Deformation parameter: a vector of Gaussian rationals, length n for a tau
/// on the finite diagram or n+1 for a lambda on the extended one.
using Parameter = std::vector<GaussianRational>;

GaussianRational dot(const IntVec& a, const Parameter& t);
Parameter parse_parameter(const std::string& csv);
std::string parameter_str(const Parameter& p);

/// z < 0 in the lexicographic order on C (real part first).
inline bool lex_negative(const GaussianRational& z) { return z < GaussianRational(0); }
/// tau_i >= 0 for every coordinate.
bool is_dominant(const Parameter& tau);

/// The finite root system of an ADE type, realized in Z^n with the coordinate
/// vectors as simple roots; root i of the diagram is coordinate i-1.
struct RootSystem {
    ADEType type;
    IntMat cartan;
    std::vector<IntVec> roots;     // sorted lexicographically
    std::vector<IntVec> positives; // sorted lexicographically
    IntVec maximal;                // the unique highest root d

    int rank() const { return static_cast<int>(cartan.size()); }
    bool contains(const IntVec& v) const;
    bool contains_positive(const IntVec& v) const;
};

long long bilinear(const IntMat& cartan, const IntVec& v, const IntVec& w);
inline long long bilinear(const RootSystem& rs, const IntVec& v, const IntVec& w) {
    return bilinear(rs.cartan, v, w);
}

/// p(v) = 1 - (v,v)/2; zero on real roots, one on the radical.
long long p_defect(const IntMat& cartan, const IntVec& v);

/// s_i(v) = v - (v, eps_i) eps_i for a vertex label i (1-based).
IntVec simple_reflection(const RootSystem& rs, int i, const IntVec& v);

/// Dual action on parameters: the unique r_i with s_i(a) . tau = a . r_i(tau),
/// explicitly tau - tau_i (C eps_i).
Parameter dual_reflection(const RootSystem& rs, int i, const Parameter& tau);

struct DominantResult {
    Parameter tau;
    std::vector<int> word; // vertex labels, applied left to right
};

/// Greedy dominance reduction: reflect at the lowest lex-negative coordinate
/// until none remains. Terminates because gamma . tau strictly increases,
/// gamma the half sum of positive roots, and the orbit of tau is finite.
DominantResult make_dominant(const RootSystem& rs, const Parameter& tau);
Parameter apply_dual_word(const RootSystem& rs, const std::vector<int>& word, Parameter tau);

/// Orbit closure of the simple roots under all simple reflections.
std::vector<IntVec> roots_by_reflection_closure(const IntMat& cartan);

/// Independent route: enumerate {a in Z^n : (a,a)_C = 2} by exact
/// Fincke-Pohst search over the LDL^T factorization of the Cartan matrix.
std::vector<IntVec> roots_by_quadric(const IntMat& cartan);

RootSystem generate_roots(ADEType t);

/// Adjoin vertex 0 along the maximal root; delta = (1, d) spans the radical.
ExtendedDiagram extend_diagram(const Diagram& d, const RootSystem& rs);

/// psi(eps_0) = -d, psi(eps_i) = eps_i; kernel Z delta, transports the
/// extended pairing to the finite one.
IntVec psi(const ExtendedDiagram& ed, const IntVec& theta);

/// Adjoint of psi: psi*(tau) = (-d . tau, tau); image is delta-perp.
Parameter psi_star(const ExtendedDiagram& ed, const Parameter& tau);

/// Sigma = {beta in the extended system : 0 < beta < delta}, materialized via
/// the explicit inverse of psi: (0, a) for a positive, (1, d + a) for a
/// negative. Sorted lexicographically.
std::vector<IntVec> sigma_set(const ExtendedDiagram& ed);

/// Cached immutable singletons, safe to share across threads.
const RootSystem& root_system(ADEType t);
const ExtendedDiagram& extended_diagram(ADEType t);

} // namespace quivar
