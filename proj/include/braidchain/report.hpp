#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidchain/suite.hpp"

namespace braidchain {

inline constexpr const char* kToolVersion = "0.1.0";

/// Render a verification report. Deterministic: byte-identical for equal
/// (config, outcomes) unless timings are enabled.
inline std::string render_report(const RunConfig& cfg, const std::vector<CheckOutcome>& checks,
                                 const std::string& format) {
    int npass = 0, nfail = 0, nskip = 0;
    for (const auto& c : checks) {
        if (c.status == "pass") ++npass;
        else if (c.status == "fail") ++nfail;
        else ++nskip;
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["tool"] = "braidchain";
        j["version"] = kToolVersion;
        nlohmann::ordered_json conf;
        conf["suite"] = cfg.suite;
        if (cfg.family) conf["group"] = family_name(*cfg.family);
        if (cfg.N) conf["n"] = *cfg.N;
        if (cfg.M) conf["m"] = *cfg.M;
        if (cfg.sign) conf["sign"] = *cfg.sign == AlgebraSign::Weyl ? "weyl" : "clifford";
        conf["max_degree"] = cfg.max_degree;
        j["config"] = conf;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json row;
            row["id"] = c.id;
            row["status"] = c.status;
            row["evidence"] = c.evidence;
            if (!c.series.empty()) {
                nlohmann::ordered_json srows = nlohmann::ordered_json::array();
                for (const auto& s : c.series) {
                    nlohmann::ordered_json sr;
                    sr["degree"] = s.degree;
                    sr["deformed"] = s.deformed.convert_to<std::uint64_t>();
                    sr["classical"] = s.classical.convert_to<std::uint64_t>();
                    sr["match"] = s.match;
                    srows.push_back(sr);
                }
                row["series"] = srows;
            }
            if (cfg.timings) row["wall_ms"] = c.wall_ms;
            rows.push_back(row);
        }
        j["checks"] = rows;
        j["summary"] = {{"pass", npass}, {"fail", nfail}, {"skip", nskip},
                        {"total", int(checks.size())}};
        return j.dump(2) + "\n";
    }

    std::string out;
    for (const auto& c : checks) {
        out += c.status == "pass" ? "[PASS] " : c.status == "fail" ? "[FAIL] " : "[SKIP] ";
        out += c.id + ": " + c.evidence;
        if (cfg.timings) out += " (" + std::to_string(c.wall_ms) + " ms)";
        out += "\n";
    }
    out += std::to_string(npass) + " passed, " + std::to_string(nfail) + " failed, " +
           std::to_string(nskip) + " skipped\n";
    return out;
}

} // namespace braidchain
