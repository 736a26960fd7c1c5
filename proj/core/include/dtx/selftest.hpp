#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dtx {

struct SelftestConfig {
    std::vector<double> gammas{-0.5, 0.0, 0.5};
    int n_max = 5;
    std::uint64_t seed = 7;
    // Decomposition suites are skipped when |gamma| exceeds this margin.
    double safety = 0.99;
};

struct SuiteResult {
    std::string name;
    double gamma = 0.0;
    bool passed = false;
    bool skipped = false;
    // Observed error divided by the tolerance (< 1 passes).
    double margin = 0.0;
    std::string note;
};

std::vector<SuiteResult> run_selftest(const SelftestConfig& config);

}  // namespace dtx
