#pragma once

#include "quivar/diagram.hpp"
#include "quivar/linalg.hpp"
#include "quivar/rational.hpp"

#include <vector>

namespace quivar {

using GQMat = Mat<GaussianRational>;

GQMat gq_mul(const GQMat& a, const GQMat& b);
GQMat gq_conj_transpose(const GQMat& a);
bool gq_is_zero(const GQMat& a);

/// A point of the doubled representation space Rep(doubled Q, dims): one
/// matrix per doubled edge k, of shape dims[dst(k)] x dims[src(k)], with
/// exact Gaussian rational entries.
struct RepPoint {
    Quiver quiver;
    IntVec dims;
    std::vector<GQMat> mats;
};

/// Element of the product of endomorphism spaces, one square block per vertex.
struct BlockVector {
    std::vector<GQMat> blocks;
};

RepPoint zero_rep(const Quiver& q, IntVec dims);

/// Simple module supported at one vertex position: dims = eps_pos, all maps 0.
RepPoint vertex_simple(const Quiver& q, int position);

/// The explicit family of points over the extended A_1 quiver at dims (1,1):
/// a1 = 1, a2 = 0, b1 = lambda1, b2 = 0, so the complex moment map takes the
/// central value (-lambda1, lambda1). Simple exactly when lambda1 != 0.
RepPoint tilde_a1_simple(const GaussianRational& lambda1);

/// Complex moment map: block i = sum over edges h into i of eps(h) x_h x_hbar.
BlockVector mu_complex(const RepPoint& x);

/// Real moment map: block i = (i/2) sum over edges h into i of
/// (x_h x_h^* - x_hbar^* x_hbar); blocks are anti-Hermitian.
BlockVector mu_real(const RepPoint& x);

/// Complex symplectic form: sum over doubled edges of eps(h) tr(x_h y_hbar).
GaussianRational symplectic_pairing(const RepPoint& x, const RepPoint& y);

/// Matrix of u |-> (u_{t(h)} x_h - y_h u_{s(h)})_h from Hom(v,w) to Rep(Q;v,w)
/// in the standard coordinate bases (vertices ascending, entries row-major;
/// doubled edges ascending).
GQMat sigma_map(const RepPoint& x, const RepPoint& y);

/// Matrix of z |-> (sum over h into i of eps(h)(z_h x_hbar + y_h z_hbar))_i
/// from Rep(Q;v,w) to Hom(v,w).
GQMat nu_map(const RepPoint& x, const RepPoint& y);

struct CohomologyDims {
    long long h0, h1, h2;
};

/// Cohomology dimensions of the three-term complex built from sigma and nu.
/// Requires both moment map values to be central and to agree on the common
/// support (otherwise throws: the maps do not form a complex).
CohomologyDims cohomology_dims(const RepPoint& x, const RepPoint& y);

} // namespace quivar
