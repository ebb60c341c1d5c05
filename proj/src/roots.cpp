#include "quivar/roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quivar {

GaussianRational dot(const IntVec& a, const Parameter& t) {
    if (a.size() != t.size()) throw std::invalid_argument("length mismatch");
    GaussianRational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += GaussianRational(Rational(a[i])) * t[i];
    return s;
}

Parameter parse_parameter(const std::string& csv) {
    Parameter out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_gaussian(item));
    if (out.empty()) throw std::invalid_argument("empty parameter");
    return out;
}

std::string parameter_str(const Parameter& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += gaussian_str(p[i]);
    }
    return out;
}

bool is_dominant(const Parameter& tau) {
    return std::none_of(tau.begin(), tau.end(), lex_negative);
}

bool RootSystem::contains(const IntVec& v) const {
    return std::binary_search(roots.begin(), roots.end(), v);
}

bool RootSystem::contains_positive(const IntVec& v) const {
    return std::binary_search(positives.begin(), positives.end(), v);
}

long long bilinear(const IntMat& cartan, const IntVec& v, const IntVec& w) {
    if (v.size() != cartan.size() || w.size() != cartan.size())
        throw std::invalid_argument("length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < cartan.size(); ++i) {
        if (v[i] == 0) continue;
        s += v[i] * dot(cartan[i], w);
    }
    return s;
}

long long p_defect(const IntMat& cartan, const IntVec& v) {
    long long q = bilinear(cartan, v, v);
    if (q % 2 != 0) throw std::logic_error("(v,v) must be even");
    return 1 - q / 2;
}

IntVec simple_reflection(const RootSystem& rs, int i, const IntVec& v) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("vertex out of range");
    IntVec out = v;
    out[i - 1] -= dot(rs.cartan[i - 1], v);
    return out;
}

Parameter dual_reflection(const RootSystem& rs, int i, const Parameter& tau) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("vertex out of range");
    if (static_cast<int>(tau.size()) != rs.rank()) throw std::invalid_argument("length mismatch");
    Parameter out = tau;
    const GaussianRational ti = tau[i - 1];
    if (ti.is_zero()) return out;
    for (int j = 0; j < rs.rank(); ++j) {
        long long c = rs.cartan[j][i - 1];
        if (c != 0) out[j] -= GaussianRational(Rational(c)) * ti;
    }
    return out;
}

Parameter apply_dual_word(const RootSystem& rs, const std::vector<int>& word, Parameter tau) {
    for (int i : word) tau = dual_reflection(rs, i, tau);
    return tau;
}

DominantResult make_dominant(const RootSystem& rs, const Parameter& tau) {
    DominantResult res{tau, {}};
    for (;;) {
        int i = 0;
        for (int j = 1; j <= rs.rank(); ++j)
            if (lex_negative(res.tau[j - 1])) {
                i = j;
                break;
            }
        if (i == 0) return res;
        res.tau = dual_reflection(rs, i, res.tau);
        res.word.push_back(i);
    }
}

std::vector<IntVec> roots_by_reflection_closure(const IntMat& cartan) {
    const std::size_t n = cartan.size();
    std::set<IntVec> seen;
    std::vector<IntVec> queue;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec v = std::move(queue.back());
        queue.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            IntVec w = v;
            w[i] -= dot(cartan[i], v);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

// Exact LDL^T data for a positive definite rational form.
struct LDL {
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> u; // unit upper triangular, u[i][j] for j > i
};

LDL ldl_decompose(const IntMat& cartan) {
    const std::size_t n = cartan.size();
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = cartan[i][j];

    LDL out;
    out.d.resize(n);
    out.u.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        out.d[i] = q[i][i];
        if (out.d[i] <= 0) throw std::invalid_argument("form is not positive definite");
        out.u[i].resize(n);
        for (std::size_t j = i + 1; j < n; ++j) out.u[i][j] = q[i][j] / out.d[i];
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t c = r; c < n; ++c) {
                q[r][c] -= out.d[i] * out.u[i][r] * out.u[i][c];
                q[c][r] = q[r][c];
            }
    }
    return out;
}

void quadric_search(const LDL& f, std::size_t i, Rational budget, IntVec& x,
                    std::vector<IntVec>& out) {
    if (budget < 0) return;
    if (i == static_cast<std::size_t>(-1)) {
        if (budget == 0 && !is_zero(x)) out.push_back(x);
        return;
    }
    Rational center = 0;
    for (std::size_t j = i + 1; j < f.d.size(); ++j)
        if (x[j] != 0) center += f.u[i][j] * x[j];

    auto term = [&](long long v) -> Rational {
        Rational y = center + v;
        return f.d[i] * y * y;
    };
    long long m = static_cast<long long>(rational_floor(-center));
    for (long long v = m; term(v) <= budget; --v) {
        x[i] = v;
        quadric_search(f, i - 1, budget - term(v), x, out);
    }
    for (long long v = m + 1; term(v) <= budget; ++v) {
        x[i] = v;
        quadric_search(f, i - 1, budget - term(v), x, out);
    }
    x[i] = 0;
}

} // namespace

std::vector<IntVec> roots_by_quadric(const IntMat& cartan) {
    LDL f = ldl_decompose(cartan);
    IntVec x(cartan.size(), 0);
    std::vector<IntVec> out;
    quadric_search(f, cartan.size() - 1, 2, x, out);
    std::sort(out.begin(), out.end());
    return out;
}

RootSystem generate_roots(ADEType t) {
    Diagram d = build_diagram(t);
    RootSystem rs;
    rs.type = t;
    rs.cartan = cartan_matrix(d);
    rs.roots = roots_by_reflection_closure(rs.cartan);

    IntVec max(t.rank, 0);
    for (const auto& r : rs.roots) {
        if (all_nonneg(r)) {
            rs.positives.push_back(r);
            for (int i = 0; i < t.rank; ++i) max[i] = std::max(max[i], r[i]);
        } else if (!all_nonpos(r)) {
            throw std::logic_error("root is not sign-coherent");
        }
    }
    if (rs.positives.size() * 2 != rs.roots.size())
        throw std::logic_error("positive roots are not half of the system");
    if (!rs.contains_positive(max)) throw std::logic_error("no maximal root");
    rs.maximal = max;
    return rs;
}

ExtendedDiagram extend_diagram(const Diagram& d, const RootSystem& rs) {
    if (rs.type != d.type) throw std::invalid_argument("root system does not match diagram");
    ExtendedDiagram ed;
    ed.base_type = d.type;
    ed.rank = d.rank;
    ed.bonds = d.bonds;
    for (int i = 1; i <= d.rank; ++i) {
        IntVec e(d.rank, 0);
        e[i - 1] = 1;
        long long m = bilinear(rs, rs.maximal, e);
        for (long long k = 0; k < m; ++k) ed.bonds.emplace_back(0, i);
    }
    std::sort(ed.bonds.begin(), ed.bonds.end());
    ed.delta.assign(d.rank + 1, 1);
    for (int i = 0; i < d.rank; ++i) ed.delta[i + 1] = rs.maximal[i];

    if (!is_zero(matvec(cartan_matrix(ed), ed.delta)))
        throw std::logic_error("delta does not span the radical");
    return ed;
}

IntVec psi(const ExtendedDiagram& ed, const IntVec& theta) {
    if (theta.size() != ed.delta.size()) throw std::invalid_argument("length mismatch");
    IntVec out(ed.rank);
    for (int i = 0; i < ed.rank; ++i) out[i] = theta[i + 1] - theta[0] * ed.delta[i + 1];
    return out;
}

Parameter psi_star(const ExtendedDiagram& ed, const Parameter& tau) {
    if (static_cast<int>(tau.size()) != ed.rank) throw std::invalid_argument("length mismatch");
    Parameter out;
    out.reserve(ed.rank + 1);
    GaussianRational head;
    for (int i = 0; i < ed.rank; ++i)
        head -= GaussianRational(Rational(ed.delta[i + 1])) * tau[i];
    out.push_back(head);
    out.insert(out.end(), tau.begin(), tau.end());
    return out;
}

std::vector<IntVec> sigma_set(const ExtendedDiagram& ed) {
    const RootSystem& rs = root_system(ed.base_type);
    std::vector<IntVec> out;
    out.reserve(rs.roots.size());
    for (const auto& a : rs.positives) {
        IntVec up(ed.rank + 1, 0);
        IntVec down(ed.rank + 1, 0);
        down[0] = 1;
        for (int i = 0; i < ed.rank; ++i) {
            up[i + 1] = a[i];
            down[i + 1] = rs.maximal[i] - a[i]; // psi^{-1}(-a) = (1, d - a)
        }
        out.push_back(std::move(up));
        out.push_back(std::move(down));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::mutex cache_mutex;

} // namespace

const RootSystem& root_system(ADEType t) {
    static std::map<std::pair<char, int>, RootSystem> cache;
    std::lock_guard lock(cache_mutex);
    auto key = std::make_pair(static_cast<char>(t.family), t.rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, generate_roots(t)).first;
    return it->second;
}

const ExtendedDiagram& extended_diagram(ADEType t) {
    static std::map<std::pair<char, int>, ExtendedDiagram> cache;
    std::lock_guard lock(cache_mutex);
    auto key = std::make_pair(static_cast<char>(t.family), t.rank);
    auto it = cache.find(key);
    if (it == cache.end()) {
        ExtendedDiagram ed = extend_diagram(build_diagram(t), generate_roots(t));
        long long sq = 0;
        for (auto c : ed.delta) sq += c * c;
        if (sq != mckay_group(t).order)
            throw std::logic_error("McKay table does not match sum of squares of delta");
        it = cache.emplace(key, std::move(ed)).first;
    }
    return it->second;
}

} // namespace quivar
