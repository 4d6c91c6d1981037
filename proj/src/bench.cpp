#include "latinsq/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>

namespace latinsq {

namespace {

struct Run {
    std::optional<ExponentialLatinSquare> square;
    std::uint64_t restarts = 0;
    std::chrono::nanoseconds elapsed{0};
};

template <class Generate>
Run timed(Generate&& fn)
{
    const auto start = std::chrono::steady_clock::now();
    Run run;
    try {
        GenerationReport r = fn();
        run.square = std::move(r.square);
        run.restarts = r.row_restarts;
    } catch (const RestartBudgetExhausted& e) {
        run.restarts = e.restarts();
    }
    run.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return run;
}

} // namespace

BenchReport run_bench(SquareOrder n, std::uint64_t iterations, std::uint64_t seed,
                      RestartBudget max_row_restarts)
{
    BenchReport report;
    report.order = n.value();
    report.iterations = iterations;
    report.seed = seed;
    std::uint64_t restart_sum = 0;
    if (iterations != 0) {
        // Untimed warm-up so the first measured square does not pay for cold caches.
        RandomSource warm_mask(seed);
        RandomSource warm_naive(seed);
        timed([&] { return generate(n, warm_mask, max_row_restarts); });
        timed([&] { return generate_naive(n, warm_naive, max_row_restarts); });
    }
    for (std::uint64_t i = 0; i < iterations; ++i) {
        RandomSource mask_src(RandomSource::derive_seed(seed, i));
        RandomSource naive_src(RandomSource::derive_seed(seed, i));
        const Run fast = timed([&] { return generate(n, mask_src, max_row_restarts); });
        const Run slow = timed([&] { return generate_naive(n, naive_src, max_row_restarts); });
        report.mask_total += fast.elapsed;
        report.naive_total += slow.elapsed;
        restart_sum += fast.restarts;
        report.max_restarts = std::max(report.max_restarts, fast.restarts);
        report.exhausted += fast.square ? 0 : 1;
        if (fast.square != slow.square || fast.restarts != slow.restarts) {
            ++report.mismatches;
        }
    }
    if (iterations != 0) {
        report.mean_restarts = static_cast<double>(restart_sum) / static_cast<double>(iterations);
    }
    return report;
}

void print(std::ostream& out, const BenchReport& r)
{
    const auto per_square_us = [&](std::chrono::nanoseconds total) {
        return r.iterations == 0 ? 0.0
                                 : static_cast<double>(total.count()) / 1e3 /
                                       static_cast<double>(r.iterations);
    };
    const auto total_ms = [](std::chrono::nanoseconds total) {
        return static_cast<double>(total.count()) / 1e6;
    };
    const auto flags = out.flags();
    out << "order " << r.order << ", iterations " << r.iterations << ", seed " << r.seed << '\n';
    out << std::fixed << std::setprecision(3);
    out << "mask:  total " << total_ms(r.mask_total) << " ms, per square "
        << per_square_us(r.mask_total) << " us\n";
    out << "naive: total " << total_ms(r.naive_total) << " ms, per square "
        << per_square_us(r.naive_total) << " us\n";
    out << "restarts: mean " << r.mean_restarts << ", max " << r.max_restarts << '\n';
    out << "budget exhausted: " << r.exhausted << '\n';
    out << "mismatches: " << r.mismatches << '\n';
    out.flags(flags);
}

} // namespace latinsq
