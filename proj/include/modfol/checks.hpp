#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modfol {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    /// Informational checks are reported but do not decide the criterion.
    bool informational = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double time_limit = 0; // 0: none
    std::vector<CheckResult> checks;
};

struct SuiteTolerances {
    double det = 1e-9;
    double roundtrip = 1e-8;
    double bvalues = 1e-9;
    double b3_unit = 1e-8;
    double connection_rel = 1e-5;
    double transport = 1e-6;
    double closed_orbit = 1e-7;
    double flow_match = 1e-6;
    double b2_drift = 1e-6;
    double tangency = 1e-6;
};

struct SuiteConfig {
    std::uint64_t seed = 7;
    int order = 200; // exponents 0..order are compared in the exact suites
    SuiteTolerances tol;
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const SuiteConfig& config);
/// Empty `ids` runs all criteria.
std::vector<CriterionResult> run_criteria(const SuiteConfig& config, const std::vector<int>& ids = {});

} // namespace modfol
