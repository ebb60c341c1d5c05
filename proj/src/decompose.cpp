#include "quivar/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quivar {

OrthogonalSlice orthogonal_roots(const RootSystem& rs, const Parameter& tau) {
    if (static_cast<int>(tau.size()) != rs.rank()) throw std::invalid_argument("length mismatch");
    OrthogonalSlice slice;
    slice.tau = tau;
    for (const auto& a : rs.roots)
        if (dot(a, tau).is_zero()) {
            slice.roots.push_back(a);
            if (all_nonneg(a)) slice.positives.push_back(a);
        }
    return slice;
}

std::vector<IntVec> minimal_base(const OrthogonalSlice& slice) {
    std::vector<IntVec> out;
    for (const auto& a : slice.positives) {
        bool decomposes = false;
        for (const auto& b : slice.positives) {
            if (b == a) continue;
            if (!leq(b, a)) continue;
            if (std::binary_search(slice.positives.begin(), slice.positives.end(), sub(a, b))) {
                decomposes = true;
                break;
            }
        }
        if (!decomposes) out.push_back(a);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> base_adjacency(const RootSystem& rs,
                                             const std::vector<IntVec>& base) {
    const std::size_t k = base.size();
    std::vector<std::vector<int>> adj(k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t) {
            long long p = bilinear(rs, base[s], base[t]);
            if (p != 0 && p != -1)
                throw std::logic_error("base pairing outside {0,-1}");
            if (p == -1) {
                adj[s].push_back(static_cast<int>(t));
                adj[t].push_back(static_cast<int>(s));
            }
        }
    return adj;
}

} // namespace

ADEType identify_type(const RootSystem& rs, const std::vector<IntVec>& base) {
    return classify_tree(base_adjacency(rs, base)).type;
}

std::vector<IntVec> subsystem_roots(const RootSystem& rs, const std::vector<IntVec>& base) {
    std::set<IntVec> seen(base.begin(), base.end());
    std::vector<IntVec> queue(base.begin(), base.end());
    while (!queue.empty()) {
        IntVec v = std::move(queue.back());
        queue.pop_back();
        for (const auto& a : base) {
            IntVec w = sub(v, scaled(a, bilinear(rs, v, a)));
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

std::pair<IntVec, IntVec> component_data(const RootSystem& rs, const std::vector<IntVec>& base) {
    const std::size_t k = base.size();
    Mat<Rational> m(rs.rank(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (int i = 0; i < rs.rank(); ++i) m(i, j) = base[j][i];

    IntVec top(k, 0);
    for (const auto& root : subsystem_roots(rs, base)) {
        std::vector<Rational> b(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) b[i] = root[i];
        auto coords = solve(m, b);
        if (!coords) throw std::logic_error("subsystem root outside base span");
        IntVec c(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (denominator((*coords)[j]) != 1)
                throw std::logic_error("non-integral base coordinates");
            c[j] = static_cast<long long>(numerator((*coords)[j]));
        }
        if (all_nonneg(c))
            for (std::size_t j = 0; j < k; ++j) top[j] = std::max(top[j], c[j]);
    }

    IntVec beta(rs.rank(), 0);
    for (std::size_t j = 0; j < k; ++j) beta = add(beta, scaled(base[j], top[j]));
    if (bilinear(rs, beta, beta) != 2) throw std::logic_error("highest root is not a root");
    return {beta, top};
}

std::vector<ComponentBase> split_components(const RootSystem& rs,
                                            const std::vector<IntVec>& base) {
    if (base.empty()) return {};
    auto adj = base_adjacency(rs, base);

    std::vector<int> comp_of(base.size(), -1);
    std::vector<std::vector<int>> comps;
    for (std::size_t v = 0; v < base.size(); ++v) {
        if (comp_of[v] != -1) continue;
        std::vector<int> comp{static_cast<int>(v)};
        comp_of[v] = static_cast<int>(comps.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : adj[comp[i]])
                if (comp_of[w] == -1) {
                    comp_of[w] = static_cast<int>(comps.size());
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    std::vector<ComponentBase> out;
    for (const auto& comp : comps) {
        std::vector<std::vector<int>> local(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : adj[comp[i]]) {
                auto it = std::lower_bound(comp.begin(), comp.end(), w);
                local[i].push_back(static_cast<int>(it - comp.begin()));
            }
        TreeShape shape = classify_tree(local);

        ComponentBase c;
        c.adtype = shape.type;
        c.base.reserve(comp.size());
        for (int local_idx : shape.order) c.base.push_back(base[comp[local_idx]]);
        std::tie(c.maximal, c.multiplicities) = component_data(rs, c.base);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const ComponentBase& x, const ComponentBase& y) {
        return *std::min_element(x.base.begin(), x.base.end()) <
               *std::min_element(y.base.begin(), y.base.end());
    });
    return out;
}

std::vector<ComponentBase> decompose(const RootSystem& rs, const Parameter& tau) {
    OrthogonalSlice slice = orthogonal_roots(rs, tau);
    return split_components(rs, minimal_base(slice));
}

} // namespace quivar
