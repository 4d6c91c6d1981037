// generator.hpp -- random exponential Latin squares by row restart.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "latinsq/random.hpp"
#include "latinsq/square.hpp"

namespace latinsq {

/// Cap on row restarts for one square; std::nullopt means unlimited.
using RestartBudget = std::optional<std::uint64_t>;

inline constexpr std::uint64_t kDefaultMaxRowRestarts = 1'000'000;

struct GenerationReport {
    ExponentialLatinSquare square;
    std::uint64_t seed;
    std::uint64_t row_restarts;
    std::chrono::nanoseconds elapsed;
};

/// Fills the square row by row, left to right. Each cell draws uniformly
/// from the symbols not yet used above it in its column or to its left in
/// its row. When that set is empty the current row is discarded and refilled
/// from column 0; completed rows are never revisited.
///
/// Throws RestartBudgetExhausted once more than `max_row_restarts` restarts
/// have been needed.
GenerationReport generate(SquareOrder n, RandomSource& src,
                          RestartBudget max_row_restarts = kDefaultMaxRowRestarts);

/// Convenience overload that owns a source seeded with `seed`.
GenerationReport generate(SquareOrder n, std::uint64_t seed,
                          RestartBudget max_row_restarts = kDefaultMaxRowRestarts);

/// Same algorithm and random draws as generate(), but availability is kept
/// in an n-element boolean array per cell instead of a mask. For a given
/// seed it produces the identical square. Used as the benchmark baseline.
GenerationReport generate_naive(SquareOrder n, RandomSource& src,
                                RestartBudget max_row_restarts = kDefaultMaxRowRestarts);

} // namespace latinsq
