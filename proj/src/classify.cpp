#include "quivar/classify.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace quivar {

std::vector<IntVec> sigma_lambda(const ExtendedDiagram& ed, const Parameter& lambda) {
    if (lambda.size() != ed.delta.size()) throw std::invalid_argument("length mismatch");
    std::vector<IntVec> out;
    for (const auto& a : sigma_set(ed))
        if (dot(a, lambda).is_zero()) out.push_back(a);
    return out;
}

namespace {

// Mixed-radix indexing of the box [0, delta]. For u <= v coordinatewise the
// linear index is componentwise monotone and index(v - u) = index(v) - index(u).
struct Box {
    IntVec radix;   // delta_i + 1
    IntVec weight;  // place values
    std::size_t total;

    explicit Box(const IntVec& delta) {
        radix.reserve(delta.size());
        long long cells = 1;
        for (auto d : delta) {
            radix.push_back(d + 1);
            cells *= d + 1;
            if (cells > 100'000'000) throw std::invalid_argument("box too large to enumerate");
        }
        weight.assign(delta.size(), 1);
        for (std::size_t i = delta.size() - 1; i-- > 0;)
            weight[i] = weight[i + 1] * radix[i + 1];
        total = static_cast<std::size_t>(cells);
    }

    std::size_t index(const IntVec& v) const {
        long long idx = 0;
        for (std::size_t i = 0; i < v.size(); ++i) idx += v[i] * weight[i];
        return static_cast<std::size_t>(idx);
    }

    bool step(IntVec& v) const { // odometer increment; false after the last cell
        for (std::size_t i = v.size(); i-- > 0;) {
            if (++v[i] < radix[i]) return true;
            v[i] = 0;
        }
        return false;
    }
};

} // namespace

std::vector<IntVec> sigma_lambda_min(const ExtendedDiagram& ed,
                                     const std::vector<IntVec>& sigma_lambda_set) {
    if (sigma_lambda_set.empty()) return {};
    Box box(ed.delta);

    std::vector<std::size_t> offsets;
    offsets.reserve(sigma_lambda_set.size());
    for (const auto& s : sigma_lambda_set) offsets.push_back(box.index(s));

    // reach[v] <=> v is a nonempty sum of elements of Sigma_lambda
    std::vector<char> reach(box.total, 0);
    IntVec v(ed.delta.size(), 0);
    std::size_t idx = 0;
    do {
        for (std::size_t k = 0; k < sigma_lambda_set.size(); ++k) {
            const IntVec& s = sigma_lambda_set[k];
            if (!leq(s, v)) continue;
            std::size_t rest = idx - offsets[k];
            if (rest == 0 || reach[rest]) {
                reach[idx] = 1;
                break;
            }
        }
        ++idx;
    } while (box.step(v));

    std::vector<IntVec> out;
    for (const auto& a : sigma_lambda_set) {
        bool decomposes = false;
        std::size_t ia = box.index(a);
        for (std::size_t k = 0; k < sigma_lambda_set.size() && !decomposes; ++k) {
            const IntVec& s = sigma_lambda_set[k];
            if (s == a || !leq(s, a)) continue;
            if (reach[ia - offsets[k]]) decomposes = true;
        }
        if (!decomposes) out.push_back(a);
    }
    return out;
}

namespace {

// one-entry cache: repeated queries against the same lambda are the common case
struct MinCache {
    std::mutex mutex;
    bool valid = false;
    ADEType type{Family::A, 1};
    Parameter lambda;
    std::vector<IntVec> min_set;
};

const std::vector<IntVec>& cached_sigma_min(const ExtendedDiagram& ed, const Parameter& lambda) {
    static MinCache cache;
    std::lock_guard lock(cache.mutex);
    if (!cache.valid || cache.type != ed.base_type || cache.lambda != lambda) {
        cache.min_set = sigma_lambda_min(ed, sigma_lambda(ed, lambda));
        cache.type = ed.base_type;
        cache.lambda = lambda;
        cache.valid = true;
    }
    return cache.min_set;
}

} // namespace

bool simple_exists(const ExtendedDiagram& ed, const IntVec& alpha, const Parameter& lambda) {
    if (alpha.size() != ed.delta.size() || lambda.size() != ed.delta.size())
        throw std::invalid_argument("length mismatch");
    if (!all_nonneg(alpha) || is_zero(alpha) || !leq(alpha, ed.delta))
        throw std::invalid_argument("alpha must satisfy 0 < alpha <= delta");
    if (alpha == ed.delta) return dot(ed.delta, lambda).is_zero();
    if (bilinear(cartan_matrix(ed), alpha, alpha) != 2) return false; // not a root
    const auto& min_set = cached_sigma_min(ed, lambda);
    return std::find(min_set.begin(), min_set.end(), alpha) != min_set.end();
}

SliceQuiver slice_quiver(const ComponentBase& component, const RootSystem& rs) {
    const int k = static_cast<int>(component.base.size());
    SliceQuiver sq;
    sq.diagram.base_type = component.adtype;
    sq.diagram.rank = k;

    auto root_at = [&](int s) -> IntVec {
        return s == 0 ? negated(component.maximal) : component.base[s - 1];
    };
    for (int s = 0; s <= k; ++s)
        for (int t = s + 1; t <= k; ++t) {
            long long mult = -bilinear(rs, root_at(s), root_at(t));
            for (long long e = 0; e < mult; ++e) sq.diagram.bonds.emplace_back(s, t);
        }
    std::sort(sq.diagram.bonds.begin(), sq.diagram.bonds.end());

    sq.delta_prime.assign(k + 1, 1);
    for (int t = 0; t < k; ++t) sq.delta_prime[t + 1] = component.multiplicities[t];
    sq.diagram.delta = sq.delta_prime;

    if (!is_zero(matvec(cartan_matrix(sq.diagram), sq.delta_prime)))
        throw std::logic_error("slice delta does not span the radical");
    sq.quiver = orient(sq.diagram);
    return sq;
}

Classification classify_singularities(const ExtendedDiagram& ed, const Parameter& lambda) {
    if (lambda.size() != ed.delta.size()) throw std::invalid_argument("length mismatch");
    if (!dot(ed.delta, lambda).is_zero())
        throw std::domain_error("parameter outside D_delta: lambda . delta != 0");

    Classification cls;
    cls.lambda = lambda;
    cls.regular_nonempty = true; // a simple module of dimension delta exists

    const RootSystem& rs = root_system(ed.base_type);
    Parameter tau(lambda.begin() + 1, lambda.end());

    for (const ComponentBase& comp : decompose(rs, tau)) {
        SingularPoint sp;
        sp.component = comp;
        sp.adtype = comp.adtype;
        sp.mckay = mckay_group(comp.adtype);

        sp.gamma0.assign(ed.rank + 1, 1);
        for (int i = 0; i < ed.rank; ++i) sp.gamma0[i + 1] = rs.maximal[i] - comp.maximal[i];
        for (const auto& a : comp.base) {
            IntVec g(ed.rank + 1, 0);
            for (int i = 0; i < ed.rank; ++i) g[i + 1] = a[i];
            sp.gammas.push_back(std::move(g));
        }
        sp.multiplicities = comp.multiplicities;
        sp.stabilizer_blocks.assign(1, 1);
        sp.stabilizer_blocks.insert(sp.stabilizer_blocks.end(), comp.multiplicities.begin(),
                                    comp.multiplicities.end());
        sp.slice = slice_quiver(comp, rs);

        IntVec sum = sp.gamma0;
        for (std::size_t t = 0; t < sp.gammas.size(); ++t)
            sum = add(sum, scaled(sp.gammas[t], sp.multiplicities[t]));
        if (sum != ed.delta) throw std::logic_error("gamma sum rule violated");

        cls.points.push_back(std::move(sp));
    }
    return cls;
}

Classification classify_tau(const ExtendedDiagram& ed, const Parameter& tau) {
    return classify_singularities(ed, psi_star(ed, tau));
}

std::vector<IntVec> r_plus(const ExtendedDiagram& ed, const IntVec& v) {
    if (v.size() != ed.delta.size()) throw std::invalid_argument("length mismatch");
    if (!all_nonneg(v)) throw std::invalid_argument("v must be nonnegative");
    IntMat cartan = cartan_matrix(ed);
    Box box(v);
    std::vector<IntVec> out;
    IntVec theta(v.size(), 0);
    do {
        if (is_zero(theta) || theta == v) continue;
        if (bilinear(cartan, theta, theta) <= 2) out.push_back(theta);
    } while (box.step(theta));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_generic(const ExtendedDiagram& ed, const std::array<std::vector<Rational>, 3>& xi,
                const IntVec& v) {
    auto rdot = [](const IntVec& a, const std::vector<Rational>& b) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0) s += Rational(a[i]) * b[i];
        return s;
    };
    for (const auto& component : xi) {
        if (component.size() != v.size()) throw std::invalid_argument("length mismatch");
        if (rdot(v, component) != 0) return false;
    }
    for (const auto& theta : r_plus(ed, v)) {
        bool off_wall = false;
        for (const auto& component : xi)
            if (rdot(theta, component) != 0) {
                off_wall = true;
                break;
            }
        if (!off_wall) return false;
    }
    return true;
}

} // namespace quivar
