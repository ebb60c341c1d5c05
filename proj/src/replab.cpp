#include "quivar/replab.hpp"

#include "quivar/roots.hpp"

#include <optional>
#include <stdexcept>

namespace quivar {

GQMat gq_mul(const GQMat& a, const GQMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("shape mismatch");
    GQMat c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

GQMat gq_conj_transpose(const GQMat& a) {
    GQMat c(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) c(j, i) = a(i, j).conj();
    return c;
}

bool gq_is_zero(const GQMat& a) {
    for (const auto& v : a.a)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

void check_shapes(const RepPoint& x) {
    if (x.dims.size() != static_cast<std::size_t>(x.quiver.nverts()))
        throw std::invalid_argument("dims size mismatch");
    if (x.mats.size() != x.quiver.doubled_size()) throw std::invalid_argument("edge count mismatch");
    for (std::size_t k = 0; k < x.mats.size(); ++k)
        if (x.mats[k].rows != static_cast<std::size_t>(x.dims[x.quiver.dst(k)]) ||
            x.mats[k].cols != static_cast<std::size_t>(x.dims[x.quiver.src(k)]))
            throw std::invalid_argument("matrix shape mismatch on edge " + x.quiver.edge_name(k));
}

void check_pair(const RepPoint& x, const RepPoint& y) {
    check_shapes(x);
    check_shapes(y);
    if (x.quiver.labels != y.quiver.labels || x.quiver.edges != y.quiver.edges)
        throw std::invalid_argument("quivers differ");
}

} // namespace

RepPoint zero_rep(const Quiver& q, IntVec dims) {
    RepPoint x;
    x.quiver = q;
    x.dims = std::move(dims);
    for (std::size_t k = 0; k < q.doubled_size(); ++k)
        x.mats.emplace_back(x.dims[q.dst(k)], x.dims[q.src(k)]);
    check_shapes(x);
    return x;
}

RepPoint vertex_simple(const Quiver& q, int position) {
    if (position < 0 || position >= q.nverts()) throw std::invalid_argument("vertex out of range");
    IntVec dims(q.nverts(), 0);
    dims[position] = 1;
    return zero_rep(q, std::move(dims));
}

RepPoint tilde_a1_simple(const GaussianRational& lambda1) {
    const ExtendedDiagram& ed = extended_diagram(ADEType(Family::A, 1));
    RepPoint x = zero_rep(orient(ed), {1, 1});
    x.mats[0](0, 0) = GaussianRational(1); // a1: 0 -> 1
    x.mats[2](0, 0) = lambda1;             // b1 = a1 reversed
    return x;
}

BlockVector mu_complex(const RepPoint& x) {
    check_shapes(x);
    BlockVector out;
    for (int i = 0; i < x.quiver.nverts(); ++i) out.blocks.emplace_back(x.dims[i], x.dims[i]);
    for (std::size_t k = 0; k < x.quiver.doubled_size(); ++k) {
        int i = x.quiver.dst(k);
        GQMat term = gq_mul(x.mats[k], x.mats[x.quiver.bar(k)]);
        for (std::size_t p = 0; p < term.a.size(); ++p) {
            if (x.quiver.eps(k) > 0)
                out.blocks[i].a[p] += term.a[p];
            else
                out.blocks[i].a[p] -= term.a[p];
        }
    }
    return out;
}

BlockVector mu_real(const RepPoint& x) {
    check_shapes(x);
    const GaussianRational half_i(Rational(0), Rational(1, 2));
    BlockVector out;
    for (int i = 0; i < x.quiver.nverts(); ++i) out.blocks.emplace_back(x.dims[i], x.dims[i]);
    for (std::size_t k = 0; k < x.quiver.doubled_size(); ++k) {
        int i = x.quiver.dst(k);
        GQMat in = gq_mul(x.mats[k], gq_conj_transpose(x.mats[k]));
        GQMat outg = gq_mul(gq_conj_transpose(x.mats[x.quiver.bar(k)]), x.mats[x.quiver.bar(k)]);
        for (std::size_t p = 0; p < in.a.size(); ++p)
            out.blocks[i].a[p] += half_i * (in.a[p] - outg.a[p]);
    }
    return out;
}

GaussianRational symplectic_pairing(const RepPoint& x, const RepPoint& y) {
    check_pair(x, y);
    if (x.dims != y.dims) throw std::invalid_argument("shape mismatch");
    GaussianRational s;
    for (std::size_t k = 0; k < x.quiver.doubled_size(); ++k) {
        GQMat prod = gq_mul(x.mats[k], y.mats[x.quiver.bar(k)]);
        GaussianRational tr;
        for (std::size_t i = 0; i < prod.rows; ++i) tr += prod(i, i);
        if (x.quiver.eps(k) > 0)
            s += tr;
        else
            s -= tr;
    }
    return s;
}

namespace {

// Coordinate layout for Hom(v,w) (vertices ascending, entries row-major) and
// Rep(Q;v,w) (doubled edges ascending, entries row-major).
struct HomLayout {
    std::vector<std::size_t> offset;
    std::size_t total = 0;

    HomLayout(const IntVec& v, const IntVec& w) {
        offset.resize(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            offset[i] = total;
            total += static_cast<std::size_t>(w[i]) * static_cast<std::size_t>(v[i]);
        }
    }
    // entry (r,c) of the block at vertex i, block shape w_i x v_i
    std::size_t at(std::size_t i, std::size_t r, std::size_t c, const IntVec& v) const {
        return offset[i] + r * static_cast<std::size_t>(v[i]) + c;
    }
};

struct RepLayout {
    std::vector<std::size_t> offset;
    std::size_t total = 0;

    RepLayout(const Quiver& q, const IntVec& v, const IntVec& w) {
        offset.resize(q.doubled_size());
        for (std::size_t k = 0; k < q.doubled_size(); ++k) {
            offset[k] = total;
            total += static_cast<std::size_t>(w[q.dst(k)]) * static_cast<std::size_t>(v[q.src(k)]);
        }
    }
    std::size_t at(std::size_t k, std::size_t r, std::size_t c, const Quiver& q,
                   const IntVec& v) const {
        return offset[k] + r * static_cast<std::size_t>(v[q.src(k)]) + c;
    }
};

} // namespace

GQMat sigma_map(const RepPoint& x, const RepPoint& y) {
    check_pair(x, y);
    const Quiver& q = x.quiver;
    const IntVec& v = x.dims;
    const IntVec& w = y.dims;
    HomLayout dom(v, w);
    RepLayout cod(q, v, w);
    GQMat m(cod.total, dom.total);

    for (std::size_t k = 0; k < q.doubled_size(); ++k) {
        const std::size_t s = q.src(k), t = q.dst(k);
        const std::size_t wt = w[t], vs = v[s], vt = v[t], ws = w[s];
        for (std::size_t r = 0; r < wt; ++r)
            for (std::size_t c = 0; c < vs; ++c) {
                std::size_t row = cod.at(k, r, c, q, v);
                // (u_t x_h)_{rc}
                for (std::size_t mm = 0; mm < vt; ++mm)
                    m(row, dom.at(t, r, mm, v)) += x.mats[k](mm, c);
                // -(y_h u_s)_{rc}
                for (std::size_t mm = 0; mm < ws; ++mm)
                    m(row, dom.at(s, mm, c, v)) -= y.mats[k](r, mm);
            }
    }
    return m;
}

GQMat nu_map(const RepPoint& x, const RepPoint& y) {
    check_pair(x, y);
    const Quiver& q = x.quiver;
    const IntVec& v = x.dims;
    const IntVec& w = y.dims;
    HomLayout cod(v, w);
    RepLayout dom(q, v, w);
    GQMat m(cod.total, dom.total);

    for (std::size_t k = 0; k < q.doubled_size(); ++k) {
        const std::size_t kb = q.bar(k);
        const std::size_t i = q.dst(k), s = q.src(k);
        const std::size_t wi = w[i], vi = v[i], vs = v[s], ws = w[s];
        const GaussianRational sign(q.eps(k));
        for (std::size_t r = 0; r < wi; ++r)
            for (std::size_t c = 0; c < vi; ++c) {
                std::size_t row = cod.at(i, r, c, v);
                // eps(h) (z_h x_hbar)_{rc}: x_hbar has shape v_s x v_i
                for (std::size_t mm = 0; mm < vs; ++mm)
                    m(row, dom.at(k, r, mm, q, v)) += sign * x.mats[kb](mm, c);
                // eps(h) (y_h z_hbar)_{rc}: z_hbar has shape w_s x v_i
                for (std::size_t mm = 0; mm < ws; ++mm)
                    m(row, dom.at(kb, mm, c, q, v)) += sign * y.mats[k](r, mm);
            }
    }
    return m;
}

namespace {

// Extract the central value of a block vector: scalar lambda_i on every
// vertex with dims > 0; nullopt entries mark empty vertices.
std::vector<std::optional<GaussianRational>> central_value(const BlockVector& b, const IntVec& dims) {
    std::vector<std::optional<GaussianRational>> out(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] == 0) continue;
        const GQMat& blk = b.blocks[i];
        GaussianRational scalar = blk(0, 0);
        for (std::size_t r = 0; r < blk.rows; ++r)
            for (std::size_t c = 0; c < blk.cols; ++c) {
                const GaussianRational& want = (r == c) ? scalar : GaussianRational(0);
                if (!(blk(r, c) == want))
                    throw std::domain_error("not a complex: moment map value is not central");
            }
        out[i] = scalar;
    }
    return out;
}

} // namespace

CohomologyDims cohomology_dims(const RepPoint& x, const RepPoint& y) {
    check_pair(x, y);
    auto lx = central_value(mu_complex(x), x.dims);
    auto ly = central_value(mu_complex(y), y.dims);
    for (std::size_t i = 0; i < lx.size(); ++i)
        if (lx[i] && ly[i] && !(*lx[i] == *ly[i]))
            throw std::domain_error("not a complex: moment map values differ");

    GQMat s = sigma_map(x, y);
    GQMat n = nu_map(x, y);
    if (!gq_is_zero(gq_mul(n, s))) throw std::logic_error("nu . sigma != 0 on a complex");

    const long long hom_dim = static_cast<long long>(s.cols);
    const long long rep_dim = static_cast<long long>(s.rows);
    const long long rank_s = static_cast<long long>(rank(s));
    const long long rank_n = static_cast<long long>(rank(n));
    return {hom_dim - rank_s, rep_dim - rank_s - rank_n, hom_dim - rank_n};
}

} // namespace quivar
