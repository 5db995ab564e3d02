#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tracecode {

/// One property suite run at desk scale: number of individual checks
/// executed and how many of them failed.
struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;

    bool passed() const { return failures == 0; }
};

/// Runs the library property suites with a deterministic RNG. Identical
/// seeds produce identical results (and identical printed reports). A
/// non-empty filter restricts the run to suites whose name contains it;
/// each suite's RNG stream depends only on the seed and the suite, so
/// filtered runs reproduce the full run's outcomes.
std::vector<SuiteResult> run_selfcheck(uint64_t seed, const std::string& filter = "");

}  // namespace tracecode
