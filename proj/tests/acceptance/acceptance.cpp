#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "orbit_duality/duality.hpp"
#include "orbit_duality/verify.hpp"

using namespace orbit_duality;

namespace {

struct Criterion {
    const char* id;
    const char* title;
    double budget_seconds;
    std::function<verify::SuiteReport()> run;
};

verify::SweepConfig bounds(std::optional<int> max_size, std::optional<int> n_max, std::optional<int> samples = {}) {
    verify::SweepConfig cfg;
    cfg.max_size = max_size;
    cfg.n_max = n_max;
    cfg.samples = samples;
    return cfg;
}

verify::SuiteReport labels() {
    verify::SuiteReport r{"labels", "[2^4]^I, [2^6]^I at n=1"};
    auto expect = [&](const LabeledOrbit& in, const LabeledOrbit& want) {
        ++r.checks;
        auto got = d_com_D(in, 1);
        if (!(got == want)) r.failures.push_back(to_string(in) + " -> " + to_string(got) + ", want " + to_string(want));
    };
    expect(LabeledOrbit(Partition{2, 2, 2, 2}, VeryEvenLabel::I), LabeledOrbit(Partition{4, 4}, VeryEvenLabel::I));
    expect(LabeledOrbit(Partition{2, 2, 2, 2, 2, 2}, VeryEvenLabel::I),
           LabeledOrbit(Partition{6, 6}, VeryEvenLabel::II));
    auto sweep = verify::very_even_labels();
    r.checks += sweep.checks;
    r.failures.insert(r.failures.end(), sweep.failures.begin(), sweep.failures.end());
    return r;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "dual-path equivalence, |p|<=14, n<=8", 60, [] { return verify::comparison(bounds(14, 8)); }},
        {"AC2", "Achar identities (i)-(vi), |p|<=16, n<=7", 120, [] { return verify::achar(bounds(16, 7)); }},
        {"AC3", "order reversal, |p|<=12, n<=6", 120, [] { return verify::order(bounds(12, 6)); }},
        {"AC4", "induction compatibility, 1000 triples, |p|+2|q|<=24", 30,
         [] { return verify::induction(bounds(24, 8, 1000)); }},
        {"AC5", "collapse oracle |p|<=12 and D-collapse split b<=6", 60,
         [] { return verify::collapse_oracle(bounds(12, {})); }},
        {"AC6", "RS closed form vs insertion, 10000 sequences", 10, [] { return verify::rs(bounds(12, 6, 10000)); }},
        {"AC7", "n=1 and metaplectic specializations, |p|<=16", 30, [] { return verify::specialize(bounds(16, {})); }},
        {"AC8", "exceptional table fidelity", 5, [] { return verify::tables({}); }},
        {"AC9", "Speh wavefront grid, m*n0<=8", 5, [] { return verify::speh(bounds({}, 8)); }},
        {"AC10", "lambda recognition round trip, |p|<=12, n<=6", 10,
         [] { return verify::lambda_round_trip(12, 6); }},
        {"AC11", "very even labels", 1, labels},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        auto report = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.budget_seconds;
        const bool ok = report.passed() && in_time;
        if (!ok) ++failed;
        std::printf("%s %-4s %s: %ld checks, %zu failures, %.2fs (budget %.0fs)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                    report.checks, report.failures.size(), secs, c.budget_seconds);
        for (std::size_t i = 0; i < report.failures.size() && i < 10; ++i)
            std::printf("    counterexample: %s\n", report.failures[i].c_str());
        if (!in_time) std::printf("    over time budget\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
