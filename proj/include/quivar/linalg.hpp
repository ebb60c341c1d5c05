#pragma once

#include "quivar/rational.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quivar {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

inline long long dot(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec matvec(const IntMat& m, const IntVec& v) {
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline IntVec scaled(const IntVec& a, long long c) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

inline IntVec negated(const IntVec& a) { return scaled(a, -1); }

inline bool is_zero(const IntVec& a) {
    for (auto x : a)
        if (x != 0) return false;
    return true;
}

inline bool all_nonneg(const IntVec& a) {
    for (auto x : a)
        if (x < 0) return false;
    return true;
}

inline bool all_nonpos(const IntVec& a) {
    for (auto x : a)
        if (x > 0) return false;
    return true;
}

/// a <= b in the coordinatewise partial order
inline bool leq(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Exact determinant of a small integer matrix (Bareiss fraction-free elimination).
BigInt det_int(IntMat m);

/// Dense matrix over an exact field (Rational or GaussianRational).
template <class F>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

namespace detail {
template <class F>
bool nonzero(const F& x) {
    if constexpr (requires { x.is_zero(); })
        return !x.is_zero();
    else
        return x != 0;
}
} // namespace detail

/// Rank by exact Gaussian elimination; no thresholds anywhere.
template <class F>
std::size_t rank(Mat<F> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && !detail::nonzero(m(piv, c))) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (!detail::nonzero(m(i, c))) continue;
            F f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Solve A x = b for a unique exact solution. Returns nullopt when the system
/// is inconsistent; requires full column rank (asserted) when consistent.
template <class F>
std::optional<std::vector<F>> solve(Mat<F> m, std::vector<F> b) {
    assert(b.size() == m.rows);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && !detail::nonzero(m(piv, c))) ++piv;
        if (piv == m.rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
            std::swap(b[piv], b[r]);
        }
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || !detail::nonzero(m(i, c))) continue;
            F f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m.rows; ++i)
        if (detail::nonzero(b[i])) return std::nullopt;
    if (pivot_col.size() != m.cols)
        throw std::logic_error("solve: matrix must have full column rank");
    std::vector<F> x(m.cols);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = b[k] / m(k, pivot_col[k]);
    return x;
}

} // namespace quivar
