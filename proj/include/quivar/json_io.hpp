#pragma once

#include "quivar/bordism.hpp"
#include "quivar/classify.hpp"
#include "quivar/replab.hpp"

#include "json.hpp"

namespace quivar {

using json = nlohmann::json;

json diagram_to_json(const Diagram& d);
json extended_to_json(const ExtendedDiagram& ed);
json root_system_to_json(const RootSystem& rs, bool count_only);
json parameter_to_json(const Parameter& p);
json decomposition_to_json(const std::vector<ComponentBase>& comps);
json slice_to_json(const SliceQuiver& sq);
json classification_to_json(const Classification& cls);
json bordism_to_json(ADEType base, const std::vector<ADEType>& parts);

json rep_point_to_json(const RepPoint& x);
RepPoint rep_point_from_json(const Quiver& q, const json& j);

} // namespace quivar
