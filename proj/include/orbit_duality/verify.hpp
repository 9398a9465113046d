#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbit_duality::verify {

/// Bounds for a property sweep. Unset fields take each suite's default.
struct SweepConfig {
    std::optional<int> max_size;
    std::optional<int> n_max;
    std::optional<int> samples;
    std::uint64_t seed = 20251018;
};

struct SuiteReport {
    std::string name;
    std::string parameters;             // resolved bounds, human readable
    long checks = 0;
    std::vector<std::string> failures;  // full inputs of each counterexample

    bool passed() const { return failures.empty(); }
};

/// comparison, achar, order, induction, collapse-oracle, rs, specialize,
/// tables, speh.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SweepConfig& cfg);

// Individual suites; defaults in parentheses.
SuiteReport comparison(const SweepConfig& cfg);       // max_size 14, n_max 8
SuiteReport achar(const SweepConfig& cfg);            // max_size 16, n_max 7
SuiteReport order(const SweepConfig& cfg);            // max_size 12, n_max 6
SuiteReport induction(const SweepConfig& cfg);        // max_size 24 (|p|+2|q|), n_max 8, samples 1000
SuiteReport collapse_oracle(const SweepConfig& cfg);  // max_size 12
SuiteReport rs(const SweepConfig& cfg);               // samples 10000, max_size 12 (round trip), n_max 6
SuiteReport specialize(const SweepConfig& cfg);       // max_size 16
SuiteReport tables(const SweepConfig& cfg);
SuiteReport speh(const SweepConfig& cfg);             // n_max 8 (m·n0)

/// Sub-checks exposed separately for the acceptance suite.
SuiteReport transitivity_of_induction(int max_part_size);  // |q0|,|q1|,|q2| <= bound
SuiteReport d_collapse_case_split(int max_size, int max_b);
SuiteReport lambda_round_trip(int max_size, int n_max);
SuiteReport additivity(int max_size, int n_max);
SuiteReport zero_orbit_rule(int max_rank, int n_max);
SuiteReport very_even_labels();

/// Human-readable report; byte-identical for identical inputs.
std::string render(const std::vector<SuiteReport>& reports, const SweepConfig& cfg);

}  // namespace orbit_duality::verify
