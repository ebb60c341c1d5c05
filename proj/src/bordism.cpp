#include "quivar/bordism.hpp"

#include <algorithm>
#include <set>

namespace quivar {

std::vector<ADEType> subgraph_types(const Diagram& d, const std::vector<int>& J) {
    std::vector<ADEType> types;
    for (const Diagram& comp : full_subgraph(d, J)) types.push_back(comp.type);
    std::sort(types.begin(), types.end());
    return types;
}

namespace {

std::vector<int> mask_to_subset(unsigned mask, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (mask & (1u << (v - 1))) out.push_back(v);
    return out;
}

} // namespace

std::optional<std::vector<int>> realizable(const Configuration& cfg) {
    if (cfg.base.rank > 16) throw std::invalid_argument("rank too large for subset enumeration");
    Diagram d = build_diagram(cfg.base);
    std::vector<ADEType> want = cfg.parts;
    std::sort(want.begin(), want.end());

    std::optional<std::vector<int>> best;
    for (unsigned mask = 0; mask < (1u << cfg.base.rank); ++mask) {
        std::vector<int> J = mask_to_subset(mask, cfg.base.rank);
        if (subgraph_types(d, J) != want) continue;
        if (!best || J < *best) best = std::move(J);
    }
    return best;
}

Parameter witness_parameter(ADEType base, const std::vector<int>& J) {
    const ExtendedDiagram& ed = extended_diagram(base);
    std::set<int> jset(J.begin(), J.end());
    Parameter tau(base.rank, GaussianRational(0));
    for (int j = 1; j <= base.rank; ++j)
        if (!jset.count(j)) tau[j - 1] = GaussianRational(1);
    return psi_star(ed, tau);
}

std::vector<std::vector<ADEType>> enumerate_configurations(ADEType base) {
    if (base.rank > 16) throw std::invalid_argument("rank too large for subset enumeration");
    Diagram d = build_diagram(base);
    std::set<std::vector<ADEType>> seen;
    for (unsigned mask = 0; mask < (1u << base.rank); ++mask)
        seen.insert(subgraph_types(d, mask_to_subset(mask, base.rank)));
    return {seen.begin(), seen.end()};
}

} // namespace quivar
