#include "cdk/bench.hpp"

#include <chrono>

#include "cdk/sampling.hpp"
#include "cdk/table.hpp"

namespace cdk {

BenchResult bench_mul(int level, int iters, unsigned long long seed) {
    BenchResult res;
    res.level = level;
    res.iters = iters;

    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, (std::size_t(1) << level) - 1);
    std::vector<std::pair<std::size_t, std::size_t>> workload(static_cast<std::size_t>(iters));
    for (auto& [i, j] : workload) {
        i = pick(rng);
        j = pick(rng);
    }

    using Clock = std::chrono::steady_clock;

    std::vector<std::pair<int, std::size_t>> recursive_out(workload.size());
    const auto t0 = Clock::now();
    for (std::size_t w = 0; w < workload.size(); ++w) {
        const auto [i, j] = workload[w];
        const Element p = cd_mul(basis_element(level, i), basis_element(level, j));
        // A basis product has a single +-1 coefficient.
        for (std::size_t k = 0; k < p.dim(); ++k) {
            if (p.coeffs[k] != 0) {
                recursive_out[w] = {p.coeffs[k] > 0 ? 1 : -1, k};
                break;
            }
        }
    }
    const auto t1 = Clock::now();
    res.recursive_seconds = std::chrono::duration<double>(t1 - t0).count();

    std::vector<std::pair<int, std::size_t>> table_out(workload.size());
    const auto t2 = Clock::now();
    structure_table(level);  // build cost charged to the table path
    for (std::size_t w = 0; w < workload.size(); ++w)
        table_out[w] = basis_product(workload[w].first, workload[w].second, level);
    const auto t3 = Clock::now();
    res.table_seconds = std::chrono::duration<double>(t3 - t2).count();

    res.results_equal = recursive_out == table_out;
    res.speedup = res.table_seconds > 0 ? res.recursive_seconds / res.table_seconds : 0.0;
    return res;
}

}  // namespace cdk
