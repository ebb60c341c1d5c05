#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include "quivar/classify.hpp"
#include "quivar/roots.hpp"

#include <map>
#include <random>

namespace quivar::test {

/// Brute-force enumeration of {a : (a,a)_C = 2} over the box |a_i| <= bound.
/// Feasible up to rank 6; independent of both library enumeration routes.
inline std::vector<IntVec> brute_box_roots(const IntMat& cartan, long long bound) {
    const std::size_t n = cartan.size();
    std::vector<IntVec> out;
    IntVec v(n, -bound);
    for (;;) {
        if (bilinear(cartan, v, v) == 2) out.push_back(v);
        std::size_t i = n;
        while (i-- > 0) {
            if (++v[i] <= bound) break;
            v[i] = -bound;
            if (i == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Sums of elements with repetition, memoized recursive search.
struct DecompOracle {
    std::vector<IntVec> elements;
    std::map<IntVec, bool> memo;

    explicit DecompOracle(std::vector<IntVec> elems) : elements(std::move(elems)) {}

    bool reachable(const IntVec& v) { // nonempty sums only
        if (is_zero(v)) return false;
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& s : elements) {
            if (!leq(s, v)) continue;
            if (s == v || reachable(sub(v, s))) {
                ok = true;
                break;
            }
        }
        return memo[v] = ok;
    }

    bool decomposable_two_or_more(const IntVec& alpha) {
        for (const auto& s : elements) {
            if (s == alpha || !leq(s, alpha)) continue;
            IntVec rest = sub(alpha, s);
            if (!is_zero(rest) && reachable(rest)) return true;
        }
        return false;
    }
};

/// Real roots strictly between 0 and delta, found by box enumeration over
/// [0, delta] with the extended pairing. Cached per type.
inline const std::vector<IntVec>& oracle_sigma_box(const ExtendedDiagram& ed) {
    static std::map<std::pair<char, int>, std::vector<IntVec>> cache;
    auto key = std::make_pair(static_cast<char>(ed.base_type.family), ed.base_type.rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    IntMat ext = cartan_matrix(ed);
    std::vector<IntVec> out;
    IntVec v(ed.delta.size(), 0);
    for (;;) {
        if (!is_zero(v) && v != ed.delta && bilinear(ext, v, v) == 2) out.push_back(v);
        std::size_t i = v.size();
        bool done = true;
        while (i-- > 0) {
            if (++v[i] <= ed.delta[i]) {
                done = false;
                break;
            }
            v[i] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end());
    return cache.emplace(key, std::move(out)).first->second;
}

/// The existence criterion evaluated directly: alpha must be a positive root
/// with alpha . lambda = 0 and p(alpha) > sum of p over the parts for every
/// decomposition into positive roots orthogonal to lambda. All admissible
/// parts have p = 0 (asserted), so the quantifier collapses to one inequality.
inline bool oracle_simple_exists(const ExtendedDiagram& ed, const IntVec& alpha,
                                 const Parameter& lambda) {
    IntMat ext = cartan_matrix(ed);
    if (!all_nonneg(alpha) || is_zero(alpha) || !leq(alpha, ed.delta)) return false;
    bool is_root = alpha == ed.delta || bilinear(ext, alpha, alpha) == 2;
    if (!is_root) return false;
    if (!dot(alpha, lambda).is_zero()) return false;

    std::vector<IntVec> candidates;
    for (const auto& s : oracle_sigma_box(ed))
        if (dot(s, lambda).is_zero()) {
            if (p_defect(ext, s) != 0) throw std::logic_error("candidate part with p != 0");
            candidates.push_back(s);
        }
    DecompOracle oracle(std::move(candidates));
    if (oracle.decomposable_two_or_more(alpha)) return p_defect(ext, alpha) > 0;
    return true;
}

/// Random parameters with exact coordinates. Zero coordinates and repeated
/// values are drawn deliberately often so that orthogonal slices are
/// frequently nonempty.
inline Parameter random_tau(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> mode(0, 3);
    Parameter tau(n);
    for (int i = 0; i < n; ++i) {
        switch (mode(rng)) {
        case 0: break; // exact zero
        case 1: tau[i] = GaussianRational(Rational(num(rng), den(rng))); break;
        default:
            tau[i] = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        }
    }
    return tau;
}

inline std::vector<int> random_word(std::mt19937_64& rng, int n, int length) {
    std::uniform_int_distribution<int> vertex(1, n);
    std::vector<int> word(length);
    for (auto& w : word) w = vertex(rng);
    return word;
}

inline std::vector<ADEType> decomposition_types(const RootSystem& rs, const Parameter& tau) {
    std::vector<ADEType> types;
    for (const auto& c : decompose(rs, tau)) types.push_back(c.adtype);
    std::sort(types.begin(), types.end());
    return types;
}

} // namespace quivar::test
