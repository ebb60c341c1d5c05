#include "quivar/cli.hpp"

#include "quivar/json_io.hpp"
#include "quivar/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace quivar {

namespace {

struct Options {
    std::string type;
    std::string base;
    std::string tau;
    std::string lambda;
    std::string parts;
    std::string output;
    bool count_only = false;
    bool verbose = false;
};

void emit(const json& j, const Options& opt, std::ostream& out) {
    if (!opt.output.empty()) {
        std::ofstream f(opt.output);
        if (!f) throw std::invalid_argument("cannot open output file: " + opt.output);
        f << j.dump(2) << "\n";
        return;
    }
    out << j.dump(2) << "\n";
}

Parameter classification_parameter(const ExtendedDiagram& ed, const Options& opt) {
    if (opt.tau.empty() == opt.lambda.empty())
        throw std::invalid_argument("provide exactly one of --tau and --lambda");
    if (!opt.tau.empty()) {
        Parameter tau = parse_parameter(opt.tau);
        if (static_cast<int>(tau.size()) != ed.rank)
            throw std::invalid_argument("--tau must have " + std::to_string(ed.rank) + " entries");
        return psi_star(ed, tau);
    }
    Parameter lambda = parse_parameter(opt.lambda);
    if (lambda.size() != ed.delta.size())
        throw std::invalid_argument("--lambda must have " + std::to_string(ed.delta.size()) +
                                    " entries");
    return lambda;
}

std::vector<ADEType> parse_parts(const std::string& csv) {
    std::vector<ADEType> parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_ade(item));
    return parts;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact classification of quiver variety singularities over extended Dynkin diagrams"};
    app.name("quivar");
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--verbose", opt.verbose, "human readable summary on stderr");

    auto* roots_cmd = app.add_subcommand("roots", "generate the finite root system of a type");
    roots_cmd->add_option("--type", opt.type, "ADE type label, e.g. A3 or E8")->required();
    roots_cmd->add_flag("--count", opt.count_only, "emit only the root count");
    roots_cmd->add_option("--output,-o", opt.output, "write JSON to a file");

    auto* dec_cmd = app.add_subcommand("decompose", "orthogonal slice decomposition of a parameter");
    dec_cmd->add_option("--type", opt.type)->required();
    dec_cmd->add_option("--tau", opt.tau, "comma separated Gaussian rationals, length = rank")
        ->required();
    dec_cmd->add_option("--output,-o", opt.output);

    auto* cls_cmd = app.add_subcommand("classify", "singular points of the quiver variety at delta");
    cls_cmd->add_option("--type", opt.type)->required();
    cls_cmd->add_option("--tau", opt.tau, "length-rank parameter (lambda is derived)");
    cls_cmd->add_option("--lambda", opt.lambda, "length rank+1 parameter with lambda . delta = 0");
    cls_cmd->add_option("--output,-o", opt.output);

    auto* slice_cmd = app.add_subcommand("slice", "slice quivers at each singular point");
    slice_cmd->add_option("--type", opt.type)->required();
    slice_cmd->add_option("--tau", opt.tau);
    slice_cmd->add_option("--lambda", opt.lambda);
    slice_cmd->add_option("--output,-o", opt.output);

    auto* bor_cmd = app.add_subcommand("bordism", "realizability of a boundary configuration");
    bor_cmd->add_option("--base", opt.base, "type at infinity")->required();
    bor_cmd->add_option("--parts", opt.parts, "comma separated types, e.g. A1,A1,D4")->required();
    bor_cmd->add_option("--output,-o", opt.output);

    auto* ver_cmd = app.add_subcommand("verify", "run the invariant self-check suite");
    ver_cmd->add_option("--type", opt.type, "restrict per-type checks to one type");
    ver_cmd->add_option("--output,-o", opt.output);

    // --verbose may appear after the verb
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv{"quivar"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (roots_cmd->parsed()) {
            emit(root_system_to_json(root_system(parse_ade(opt.type)), opt.count_only), opt, out);
            if (opt.verbose) err << "generated root system for " << opt.type << "\n";
        } else if (dec_cmd->parsed()) {
            const RootSystem& rs = root_system(parse_ade(opt.type));
            Parameter tau = parse_parameter(opt.tau);
            if (static_cast<int>(tau.size()) != rs.rank())
                throw std::invalid_argument("--tau must have " + std::to_string(rs.rank()) +
                                            " entries");
            auto comps = decompose(rs, tau);
            emit(decomposition_to_json(comps), opt, out);
            if (opt.verbose) err << comps.size() << " component(s)\n";
        } else if (cls_cmd->parsed() || slice_cmd->parsed()) {
            const ExtendedDiagram& ed = extended_diagram(parse_ade(opt.type));
            Classification cls = classify_singularities(ed, classification_parameter(ed, opt));
            if (cls_cmd->parsed()) {
                emit(classification_to_json(cls), opt, out);
            } else {
                json slices = json::array();
                for (const auto& sp : cls.points) slices.push_back(slice_to_json(sp.slice));
                emit({{"lambda", parameter_to_json(cls.lambda)}, {"slices", slices}}, opt, out);
            }
            if (opt.verbose) err << cls.points.size() << " singular point(s)\n";
        } else if (bor_cmd->parsed()) {
            json j = bordism_to_json(parse_ade(opt.base), parse_parts(opt.parts));
            emit(j, opt, out);
            if (opt.verbose)
                err << (j["realizable"].get<bool>() ? "realizable" : "not realizable") << "\n";
        } else if (ver_cmd->parsed()) {
            std::optional<ADEType> only;
            if (!opt.type.empty()) only = parse_ade(opt.type);
            auto checks = run_verification(only);
            int failed = 0;
            json arr = json::array();
            for (const auto& c : checks) {
                json entry{{"name", c.name}, {"passed", c.passed}};
                if (!c.passed) {
                    ++failed;
                    entry["detail"] = c.detail;
                }
                arr.push_back(std::move(entry));
                if (opt.verbose)
                    err << (c.passed ? "pass " : "FAIL ") << c.name
                        << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            }
            emit({{"passed", static_cast<int>(checks.size()) - failed},
                  {"failed", failed},
                  {"checks", arr}},
                 opt, out);
            if (failed > 0) return 2;
        }
    } catch (const std::domain_error& e) {
        emit({{"error", e.what()}}, opt, out);
        return 2;
    } catch (const std::invalid_argument& e) {
        emit({{"error", e.what()}}, opt, out);
        return 1;
    } catch (const std::exception& e) {
        emit({{"error", e.what()}}, opt, out);
        return 2;
    }
    return 0;
}

} // namespace quivar
