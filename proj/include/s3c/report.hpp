#pragma once

// Machine-readable verification reports. nlohmann::json keeps object keys
// sorted and serializes doubles shortest-roundtrip, so fixed inputs give
// byte-identical output.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "s3c/charts.hpp"
#include "s3c/version.hpp"

namespace s3c {

struct VerificationReport {
    std::string tool_version = kToolVersion;
    std::optional<int> system;
    std::string check;
    std::map<std::string, std::string> params;
    int n_points = 0;
    std::uint64_t seed = 0;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::vector<std::string> notes;
};

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["tool_version"] = r.tool_version;
    if (r.system)
        j["system"] = *r.system;
    else
        j["system"] = nullptr;
    j["check"] = r.check;
    j["params"] = r.params;
    j["n_points"] = r.n_points;
    j["seed"] = r.seed;
    j["max_abs_err"] = r.max_abs_err;
    j["max_rel_err"] = r.max_rel_err;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["notes"] = r.notes;
    return j;
}

inline nlohmann::json chart_registry_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (int s = 1; s <= 21; ++s) {
        const ChartInfo& c = chart_info(s);
        nlohmann::json j;
        j["system_id"] = c.id;
        j["name"] = c.name;
        nlohmann::json domains = nlohmann::json::array();
        for (int a = 0; a < 3; ++a) {
            nlohmann::json d;
            d["coord"] = c.coords[a];
            d["lo"] = c.domain[a][0] <= -1e99 ? nlohmann::json() : nlohmann::json(c.domain[a][0]);
            d["hi"] = c.domain[a][1] >= 1e99 ? nlohmann::json() : nlohmann::json(c.domain[a][1]);
            domains.push_back(d);
        }
        j["domains"] = domains;
        j["capabilities"] = {{"embedding", c.embedding},
                             {"metric_closed_form", c.metric_closed_form},
                             {"gamma_closed_form", c.gamma_printed},
                             {"eigenbasis", c.eigenbasis},
                             {"constraint_identity_only", c.constraint_identity_only}};
        j["errata_notes"] = c.errata;
        if (c.k2 != 0.0) j["modulus_k2"] = c.k2;
        if (c.pa != 0.0) j["param_a"] = c.pa;
        if (c.pb != 0.0) j["param_b"] = c.pb;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace s3c
