#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "braidchain/report.hpp"

using namespace braidchain;

TEST_CASE("suite outcomes are deterministic") {
    RunConfig cfg;
    cfg.suite = "lemma1";
    std::string r1 = render_report(cfg, run_suite(cfg), "json");
    std::string r2 = render_report(cfg, run_suite(cfg), "json");
    CHECK(r1 == r2);
    std::string t1 = render_report(cfg, run_suite(cfg), "text");
    std::string t2 = render_report(cfg, run_suite(cfg), "text");
    CHECK(t1 == t2);
}

TEST_CASE("json report shape") {
    RunConfig cfg;
    cfg.suite = "lemma1";
    cfg.family = Family::SO;
    cfg.N = 3;
    auto checks = run_suite(cfg);
    nlohmann::json j = nlohmann::json::parse(render_report(cfg, checks, "json"));
    CHECK(j["schema"] == 1);
    CHECK(j["tool"] == "braidchain");
    CHECK(j["config"]["suite"] == "lemma1");
    CHECK(j["config"]["group"] == "so");
    CHECK(j["config"]["n"] == 3);
    REQUIRE(j["checks"].size() == 2);
    // weyl row passes; clifford is the expected no-go, reported as a pass of
    // the negative check with the eigenvalue witness in the evidence
    CHECK(j["checks"][0]["id"] == "lemma1.so3.weyl");
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][1]["id"] == "lemma1.so3.clifford");
    CHECK(j["checks"][1]["status"] == "pass");
    std::string ev = j["checks"][1]["evidence"];
    CHECK(ev.find("q^-2") != std::string::npos);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["total"] == 2);
    // timings are excluded unless requested, preserving byte determinism
    CHECK_FALSE(j["checks"][0].contains("wall_ms"));
}

TEST_CASE("suite filters") {
    RunConfig cfg;
    cfg.suite = "series";
    cfg.family = Family::SL;
    cfg.N = 2;
    cfg.M = 2;
    cfg.max_degree = 4;
    auto checks = run_suite(cfg);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
        bool matches = c.id.find("sl2") != std::string::npos ||
                       c.id.find("m2n2") != std::string::npos;
        CHECK(matches);
        CHECK(c.status == "pass");
    }
    // unknown config simply yields an empty selection rather than failures
    RunConfig none;
    none.suite = "series";
    none.N = 9;
    CHECK(run_suite(none).empty());
}

TEST_CASE("lowered max degree shortens the series rows") {
    RunConfig cfg;
    cfg.suite = "series";
    cfg.family = Family::SL;
    cfg.N = 2;
    cfg.M = 1;
    cfg.sign = AlgebraSign::Weyl;
    cfg.max_degree = 2;
    auto checks = run_suite(cfg);
    REQUIRE_FALSE(checks.empty());
    CHECK(checks[0].evidence.find("d2:") != std::string::npos);
    CHECK(checks[0].evidence.find("d3:") == std::string::npos);
}
