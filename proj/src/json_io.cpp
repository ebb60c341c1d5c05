#include "quivar/json_io.hpp"

#include <algorithm>

namespace quivar {

namespace {

json bonds_to_json(const std::vector<std::pair<int, int>>& bonds) {
    json out = json::array();
    for (auto [a, b] : bonds) out.push_back(json::array({a, b}));
    return out;
}

} // namespace

json diagram_to_json(const Diagram& d) {
    return {{"family", std::string(1, static_cast<char>(d.type.family))},
            {"rank", d.rank},
            {"bonds", bonds_to_json(d.bonds)}};
}

json extended_to_json(const ExtendedDiagram& ed) {
    return {{"family", std::string(1, static_cast<char>(ed.base_type.family))},
            {"rank", ed.rank},
            {"bonds", bonds_to_json(ed.bonds)},
            {"delta", ed.delta}};
}

json root_system_to_json(const RootSystem& rs, bool count_only) {
    json out{{"type", rs.type.str()}, {"count", rs.roots.size()}};
    if (!count_only) {
        out["roots"] = rs.roots;
        out["positives"] = rs.positives;
        out["maximal"] = rs.maximal;
    }
    return out;
}

json parameter_to_json(const Parameter& p) {
    json out = json::array();
    for (const auto& z : p) out.push_back(gaussian_str(z));
    return out;
}

json decomposition_to_json(const std::vector<ComponentBase>& comps) {
    json arr = json::array();
    for (const auto& c : comps)
        arr.push_back({{"type", c.adtype.str()},
                       {"base", c.base},
                       {"beta", c.maximal},
                       {"mult", c.multiplicities}});
    return {{"components", arr}};
}

json slice_to_json(const SliceQuiver& sq) {
    json orientation = json::array();
    for (auto [s, t] : sq.quiver.edges) orientation.push_back(json::array({s, t}));
    json out = extended_to_json(sq.diagram);
    out["orientation"] = orientation;
    return out;
}

json classification_to_json(const Classification& cls) {
    json singular = json::array();
    for (const auto& sp : cls.points) {
        json entry{{"type", sp.adtype.str()},
                   {"mckay", {{"name", sp.mckay.name}, {"order", sp.mckay.order}}},
                   {"gamma0", sp.gamma0},
                   {"gammas", sp.gammas},
                   {"multiplicities", sp.multiplicities},
                   {"stabilizer", sp.stabilizer_blocks},
                   {"base", sp.component.base},
                   {"beta", sp.component.maximal},
                   {"slice_delta", sp.slice.delta_prime}};
        singular.push_back(std::move(entry));
    }
    return {{"lambda", parameter_to_json(cls.lambda)},
            {"singular", singular},
            {"regular_nonempty", cls.regular_nonempty}};
}

json bordism_to_json(ADEType base, const std::vector<ADEType>& parts) {
    Configuration cfg{base, parts};
    auto witness = realizable(cfg);
    if (!witness) return {{"realizable", false}};
    return {{"realizable", true},
            {"witness_J", *witness},
            {"lambda", parameter_to_json(witness_parameter(base, *witness))}};
}

json rep_point_to_json(const RepPoint& x) {
    json mats = json::object();
    for (std::size_t k = 0; k < x.mats.size(); ++k) {
        json rows = json::array();
        for (std::size_t r = 0; r < x.mats[k].rows; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < x.mats[k].cols; ++c)
                row.push_back(gaussian_str(x.mats[k](r, c)));
            rows.push_back(std::move(row));
        }
        mats[x.quiver.edge_name(k)] = std::move(rows);
    }
    return {{"dims", x.dims}, {"mats", mats}};
}

RepPoint rep_point_from_json(const Quiver& q, const json& j) {
    RepPoint x = zero_rep(q, j.at("dims").get<IntVec>());
    const json& mats = j.at("mats");
    for (std::size_t k = 0; k < x.mats.size(); ++k) {
        auto it = mats.find(q.edge_name(k));
        if (it == mats.end()) continue; // absent edges stay zero
        const json& rows = *it;
        if (rows.size() != x.mats[k].rows) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t r = 0; r < x.mats[k].rows; ++r) {
            if (rows[r].size() != x.mats[k].cols)
                throw std::invalid_argument("matrix shape mismatch");
            for (std::size_t c = 0; c < x.mats[k].cols; ++c)
                x.mats[k](r, c) = parse_gaussian(rows[r][c].get<std::string>());
        }
    }
    return x;
}

} // namespace quivar
