#pragma once

#include <string>
#include <vector>

#include "cdk/element.hpp"

namespace cdk {

struct SuiteReport {
    std::string name;
    bool pass = false;
    std::vector<std::string> lines;  // deterministic, seed-stable output
};

// Identity suites over seeded random samples. Each returns a
// report whose pass flag encodes the suite's expectation for that level:
// suites verifying a claim fail on any violation; suites demonstrating an
// expected failure (ladder at the threshold level) fail only when the
// expected counterexample is absent.
SuiteReport suite_doubly_pure(int level, int samples, unsigned long long seed);
SuiteReport suite_ladder(int level, int samples, unsigned long long seed);
SuiteReport suite_norm_mult(int level, int samples, unsigned long long seed);
SuiteReport suite_flexible(int level, int samples, unsigned long long seed);
SuiteReport suite_level_bridge(int level, int samples, unsigned long long seed);

// Dispatch by name; throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, int level, int samples, unsigned long long seed);

std::vector<std::string> suite_names();

}  // namespace cdk
