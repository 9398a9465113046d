#include <doctest.h>

#include "orbit_duality/errors.hpp"
#include "orbit_duality/verify.hpp"

using namespace orbit_duality;

TEST_CASE("suite registry") {
    CHECK(verify::suite_names().size() == 9);
    CHECK(verify::is_suite("collapse-oracle"));
    CHECK_FALSE(verify::is_suite("all"));
    CHECK_THROWS_AS(verify::run_suite("nonsense", {}), DomainError);
}

TEST_CASE("small sweeps pass") {
    verify::SweepConfig cfg;
    cfg.max_size = 6;
    cfg.n_max = 3;
    cfg.samples = 50;
    for (const auto& name : verify::suite_names()) {
        auto r = verify::run_suite(name, cfg);
        INFO(name);
        CHECK(r.checks > 0);
        CHECK(r.passed());
    }
}

TEST_CASE("reports are deterministic for a seed") {
    verify::SweepConfig cfg;
    cfg.samples = 200;
    cfg.seed = 42;
    auto a = verify::render({verify::induction(cfg), verify::rs(cfg)}, cfg);
    auto b = verify::render({verify::induction(cfg), verify::rs(cfg)}, cfg);
    CHECK(a == b);
    CHECK(a.find("seed 42") != std::string::npos);
}

TEST_CASE("render lists counterexamples") {
    verify::SuiteReport bad{"demo", "x=1", 3, {"p=[2]: [1] != [2]"}};
    auto text = verify::render({bad}, {});
    CHECK(text.find("FAIL demo") != std::string::npos);
    CHECK(text.find("counterexample: p=[2]: [1] != [2]") != std::string::npos);
    CHECK(text.find("FAILURES FOUND") != std::string::npos);
}
