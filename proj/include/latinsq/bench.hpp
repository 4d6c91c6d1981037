// bench.hpp -- mask-based generation against the boolean-array baseline.

#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>

#include "latinsq/generator.hpp"

namespace latinsq {

struct BenchReport {
    int order = 0;
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
    std::chrono::nanoseconds mask_total{0};
    std::chrono::nanoseconds naive_total{0};
    double mean_restarts = 0.0;
    std::uint64_t max_restarts = 0;
    /// Iterations whose mask-based run hit the restart budget. Their
    /// restarts up to that point are included in the statistics.
    std::uint64_t exhausted = 0;
    /// Iterations where the two implementations disagreed. Always 0 unless
    /// one of them is broken, since both consume the same random draws.
    std::uint64_t mismatches = 0;
};

/// Iteration i uses seed derive_seed(seed, i) for both implementations.
/// One untimed warm-up run of each precedes the measurements. Running out
/// of budget is recorded in the report, never thrown.
BenchReport run_bench(SquareOrder n, std::uint64_t iterations, std::uint64_t seed,
                      RestartBudget max_row_restarts = kDefaultMaxRowRestarts);

void print(std::ostream& out, const BenchReport& report);

} // namespace latinsq
