#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tatecalc/module.hpp"

namespace tate {

/// A parsed problem file: the ring and a set of named modules.
///
/// File schema (JSON):
///   {
///     "field":   {"p": 101},
///     "ring":    {"vars": ["x","y"], "relations": ["x^2", "y^2"]},
///     "modules": {
///        "M":  {"presentation": [["x"], ["y"]]},
///        "k":  {"builtin": "residue_field"},
///        "F":  {"builtin": "free:2"},
///        "D":  {"builtin": "dual:M"},
///        "W":  {"builtin": "random:42"}
///     }
///   }
/// Polynomial strings follow the library grammar. Builtin "random:<seed>"
/// draws a presentation with at most 2 generators and 3 relations.
struct Problem {
    AlgebraPtr ring;
    std::map<std::string, FinModule> modules;
    std::uint32_t p = 0;
    std::vector<std::string> vars;
    std::vector<std::string> relations;

    const FinModule& module(const std::string& name) const {
        auto it = modules.find(name);
        if (it == modules.end()) throw InputError("no module named '" + name + "' in problem");
        return it->second;
    }
};

inline Problem load_problem_json(const nlohmann::json& j) {
    Problem prob;
    try {
        prob.p = j.at("field").at("p").get<std::uint32_t>();
        prob.vars = j.at("ring").at("vars").get<std::vector<std::string>>();
        prob.relations = j.at("ring").at("relations").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed problem file: ") + e.what());
    }
    prob.ring = make_algebra(prob.p, prob.vars, prob.relations);

    if (!j.contains("modules")) return prob;
    const auto& mods = j.at("modules");
    if (!mods.is_object()) throw InputError("\"modules\" must be an object");

    PrimeField f(prob.p);
    // two passes so that dual:<name> may refer to any non-dual module
    std::vector<std::pair<std::string, std::string>> duals;
    for (auto it = mods.begin(); it != mods.end(); ++it) {
        const std::string& name = it.key();
        const auto& spec = it.value();
        if (spec.contains("presentation")) {
            auto rows = spec.at("presentation").get<std::vector<std::vector<std::string>>>();
            std::vector<std::vector<Polynomial>> A;
            for (const auto& row : rows) {
                std::vector<Polynomial> prow;
                for (const auto& s : row) prow.push_back(parse_poly(s, prob.vars, f));
                A.push_back(std::move(prow));
            }
            prob.modules.emplace(name, module_from_presentation(prob.ring, A));
        } else if (spec.contains("builtin")) {
            std::string b = spec.at("builtin").get<std::string>();
            if (b == "residue_field") {
                prob.modules.emplace(name, FinModule::residue_field(prob.ring));
            } else if (b.rfind("free:", 0) == 0) {
                std::size_t n = std::stoul(b.substr(5));
                prob.modules.emplace(name, FinModule::free_module(prob.ring, n));
            } else if (b.rfind("random:", 0) == 0) {
                std::uint64_t seed = std::stoull(b.substr(7));
                prob.modules.emplace(name, random_module(prob.ring, seed, 2, 3));
            } else if (b.rfind("dual:", 0) == 0) {
                duals.emplace_back(name, b.substr(5));
            } else {
                throw InputError("unknown builtin module '" + b + "'");
            }
        } else {
            throw InputError("module '" + name + "' needs \"presentation\" or \"builtin\"");
        }
    }
    for (const auto& [name, of] : duals) {
        auto it = prob.modules.find(of);
        if (it == prob.modules.end())
            throw InputError("dual:" + of + " refers to a module that does not exist");
        prob.modules.emplace(name, matlis_dual(it->second));
    }
    return prob;
}

inline Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("problem file is not valid JSON: ") + e.what());
    }
    return load_problem_json(j);
}

}  // namespace tate
