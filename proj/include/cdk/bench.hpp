#pragma once

#include "cdk/element.hpp"

namespace cdk {

struct BenchResult {
    int level = 0;
    int iters = 0;
    double recursive_seconds = 0.0;
    double table_seconds = 0.0;   // includes the one-time table build
    double speedup = 0.0;
    bool results_equal = false;   // equality gates the timing claim
};

// Times recursive cd_mul against table-driven basis products on the same
// seeded random basis-pair workload and cross-checks the results.
BenchResult bench_mul(int level, int iters, unsigned long long seed = 1);

}  // namespace cdk
