// Acceptance gate: one line per criterion, tolerances fixed in SuiteConfig defaults.
#include "modfol/checks.hpp"

#include <cstdio>

int main()
{
    const modfol::SuiteConfig config; // seed 7, order 200, default tolerances
    int failed = 0;
    for (const auto& r : modfol::run_criteria(config)) {
        std::printf("criterion %d %-28s %s  (%.3f s)\n", r.id, r.title.c_str(), r.pass ? "PASS" : "FAIL", r.seconds);
        for (const auto& c : r.checks) {
            if (!c.pass || c.informational) {
                std::printf("    %s %s%s%s\n", c.informational ? (c.pass ? "info pass:" : "info fail:") : "failed:",
                            c.name.c_str(), c.detail.empty() ? "" : " -- ", c.detail.c_str());
            }
        }
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", modfol::kCriterionCount - failed, modfol::kCriterionCount);
    return failed == 0 ? 0 : 1;
}
