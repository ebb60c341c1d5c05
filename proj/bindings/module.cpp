#include "quivar/bordism.hpp"
#include "quivar/classify.hpp"
#include "quivar/json_io.hpp"
#include "quivar/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace quivar;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

Parameter parameter_from_py(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_parameter(obj.cast<std::string>());
    Parameter p;
    for (const auto& item : obj.cast<py::sequence>())
        p.push_back(parse_gaussian(py::str(item).cast<std::string>()));
    if (p.empty()) throw std::invalid_argument("empty parameter");
    return p;
}

std::vector<ADEType> parts_from_py(const py::object& obj) {
    std::vector<ADEType> parts;
    if (py::isinstance<py::str>(obj)) {
        std::stringstream ss(obj.cast<std::string>());
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(parse_ade(item));
    } else {
        for (const auto& item : obj.cast<py::sequence>())
            parts.push_back(parse_ade(item.cast<std::string>()));
    }
    return parts;
}

Parameter classification_parameter(const ExtendedDiagram& ed, const py::object& tau,
                                   const py::object& lambda) {
    if (tau.is_none() == lambda.is_none())
        throw std::invalid_argument("provide exactly one of tau and lambda");
    if (!tau.is_none()) {
        Parameter t = parameter_from_py(tau);
        if (static_cast<int>(t.size()) != ed.rank)
            throw std::invalid_argument("tau must have rank entries");
        return psi_star(ed, t);
    }
    Parameter l = parameter_from_py(lambda);
    if (l.size() != ed.delta.size())
        throw std::invalid_argument("lambda must have rank+1 entries");
    return l;
}

} // namespace

PYBIND11_MODULE(_quivar, m) {
    m.doc() = "exact classification of quiver variety singularities over extended Dynkin "
              "diagrams: root systems, orthogonal slice decompositions, local ADE types, "
              "slice quivers and bordism configurations";

    m.def("types", [](int max_rank) {
        py::list out;
        for (ADEType t : all_types(max_rank)) out.append(t.str());
        return out;
    }, py::arg("max_rank") = 8, "ADE type labels up to a rank bound");

    m.def("diagram", [](const std::string& type) {
        return json_to_py(diagram_to_json(build_diagram(parse_ade(type))));
    }, py::arg("type"), "finite Dynkin diagram with the documented labeling");

    m.def("extended_diagram", [](const std::string& type) {
        return json_to_py(extended_to_json(extended_diagram(parse_ade(type))));
    }, py::arg("type"), "extension along the maximal root, with delta");

    m.def("mckay", [](const std::string& type) {
        GroupDescriptor g = mckay_group(parse_ade(type));
        py::dict out;
        out["name"] = g.name;
        out["order"] = g.order;
        return out;
    }, py::arg("type"), "binary polyhedral group attached by the McKay correspondence");

    m.def("roots", [](const std::string& type, bool count_only) {
        return json_to_py(root_system_to_json(root_system(parse_ade(type)), count_only));
    }, py::arg("type"), py::arg("count_only") = false, "finite root system data");

    m.def("decompose", [](const std::string& type, const py::object& tau) {
        const RootSystem& rs = root_system(parse_ade(type));
        Parameter t = parameter_from_py(tau);
        if (static_cast<int>(t.size()) != rs.rank())
            throw std::invalid_argument("tau must have rank entries");
        return json_to_py(decomposition_to_json(decompose(rs, t)));
    }, py::arg("type"), py::arg("tau"),
       "orthogonal slice decomposition into irreducible ADE subsystems");

    m.def("classify", [](const std::string& type, const py::object& tau, const py::object& lambda) {
        const ExtendedDiagram& ed = extended_diagram(parse_ade(type));
        Classification cls =
            classify_singularities(ed, classification_parameter(ed, tau, lambda));
        return json_to_py(classification_to_json(cls));
    }, py::arg("type"), py::arg("tau") = py::none(), py::arg("lambda") = py::none(),
       "singular points of the quiver variety at dimension delta");

    m.def("slice_quivers", [](const std::string& type, const py::object& tau,
                              const py::object& lambda) {
        const ExtendedDiagram& ed = extended_diagram(parse_ade(type));
        Classification cls =
            classify_singularities(ed, classification_parameter(ed, tau, lambda));
        json slices = json::array();
        for (const auto& sp : cls.points) slices.push_back(slice_to_json(sp.slice));
        return json_to_py(json{{"lambda", parameter_to_json(cls.lambda)}, {"slices", slices}});
    }, py::arg("type"), py::arg("tau") = py::none(), py::arg("lambda") = py::none(),
       "slice quiver at each singular point");

    m.def("make_dominant", [](const std::string& type, const py::object& tau) {
        const RootSystem& rs = root_system(parse_ade(type));
        Parameter t = parameter_from_py(tau);
        if (static_cast<int>(t.size()) != rs.rank())
            throw std::invalid_argument("tau must have rank entries");
        DominantResult res = make_dominant(rs, t);
        py::dict out;
        out["tau"] = json_to_py(parameter_to_json(res.tau));
        out["word"] = res.word;
        return out;
    }, py::arg("type"), py::arg("tau"), "reflect a parameter into the dominant chamber");

    m.def("simple_exists", [](const std::string& type, const IntVec& alpha,
                              const py::object& lambda) {
        const ExtendedDiagram& ed = extended_diagram(parse_ade(type));
        return simple_exists(ed, alpha, parameter_from_py(lambda));
    }, py::arg("type"), py::arg("alpha"), py::arg("lambda"),
       "existence of a simple module of dimension alpha, 0 < alpha <= delta");

    m.def("r_plus", [](const std::string& type, const py::object& v) {
        const ExtendedDiagram& ed = extended_diagram(parse_ade(type));
        IntVec vec = v.is_none() ? ed.delta : v.cast<IntVec>();
        return json_to_py(json(r_plus(ed, vec)));
    }, py::arg("type"), py::arg("v") = py::none(),
       "wall set {theta : 0 < theta < v, (theta,theta) <= 2}; v defaults to delta");

    m.def("is_generic", [](const std::string& type, const std::vector<std::string>& xi,
                           const py::object& v) {
        if (xi.size() != 3) throw std::invalid_argument("xi must have three components");
        const ExtendedDiagram& ed = extended_diagram(parse_ade(type));
        std::array<std::vector<Rational>, 3> parsed;
        for (int k = 0; k < 3; ++k) {
            std::stringstream ss(xi[k]);
            std::string item;
            while (std::getline(ss, item, ',')) parsed[k].push_back(parse_rational(item));
        }
        IntVec vec = v.is_none() ? ed.delta : v.cast<IntVec>();
        return is_generic(ed, parsed, vec);
    }, py::arg("type"), py::arg("xi"), py::arg("v") = py::none(),
       "whether the real parameter triple avoids every wall of R+(v)");

    m.def("bordism", [](const std::string& base, const py::object& parts) {
        return json_to_py(bordism_to_json(parse_ade(base), parts_from_py(parts)));
    }, py::arg("base"), py::arg("parts"),
       "realizability of a boundary configuration, with a parameter witness");

    m.def("enumerate_configurations", [](const std::string& base) {
        py::list out;
        for (const auto& cfg : enumerate_configurations(parse_ade(base))) {
            py::list entry;
            for (ADEType t : cfg) entry.append(t.str());
            out.append(entry);
        }
        return out;
    }, py::arg("base"), "all achievable singularity type multisets over a base type");

    m.def("verify", [](const py::object& type) {
        std::optional<ADEType> only;
        if (!type.is_none()) only = parse_ade(type.cast<std::string>());
        auto checks = run_verification(only);
        int failed = 0;
        py::list entries;
        for (const auto& c : checks) {
            py::dict entry;
            entry["name"] = c.name;
            entry["passed"] = c.passed;
            if (!c.passed) entry["detail"] = c.detail;
            entries.append(entry);
            if (!c.passed) ++failed;
        }
        py::dict out;
        out["passed"] = static_cast<int>(checks.size()) - failed;
        out["failed"] = failed;
        out["checks"] = entries;
        return out;
    }, py::arg("type") = py::none(), "run the invariant self-check suite");
}
