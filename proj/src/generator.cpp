#include "latinsq/generator.hpp"

#include <vector>

namespace latinsq {

namespace {

using Clock = std::chrono::steady_clock;

void charge_restart(std::uint64_t& restarts, const RestartBudget& budget, std::uint64_t seed,
                    int rows_completed)
{
    ++restarts;
    if (budget && restarts > *budget) {
        throw RestartBudgetExhausted(seed, restarts - 1, rows_completed);
    }
}

} // namespace

GenerationReport generate(SquareOrder n, RandomSource& src, RestartBudget max_row_restarts)
{
    const auto start = Clock::now();
    const int size = n.value();
    std::vector<std::uint64_t> cells(static_cast<std::size_t>(size * size), 0);

    // Union of the completed rows' cells, per column. Equal to OR-ing every
    // cell above the current row in that column.
    std::vector<SubsetMask> column_used(static_cast<std::size_t>(size),
                                        SubsetMask::from_bits(0, n));
    std::uint64_t restarts = 0;

    for (int row = 0; row < size; ++row) {
        SubsetMask row_used = SubsetMask::from_bits(0, n);
        int col = 0;
        while (col < size) {
            const SubsetMask available =
                complement_in_universe(set_union(column_used[col], row_used));
            if (!available.empty()) {
                const SubsetMask pick = choice(available, src);
                cells[static_cast<std::size_t>(row * size + col)] = pick.bits();
                row_used = set_union(row_used, pick);
                ++col;
            } else {
                charge_restart(restarts, max_row_restarts, src.seed(), row);
                row_used = SubsetMask::from_bits(0, n);
                col = 0;
            }
        }
        for (int c = 0; c < size; ++c) {
            column_used[c] = set_union(
                column_used[c],
                SubsetMask::from_bits(cells[static_cast<std::size_t>(row * size + c)], n));
        }
    }

    return GenerationReport{
        ExponentialLatinSquare::from_cells_unchecked(n, std::move(cells)), src.seed(), restarts,
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)};
}

GenerationReport generate(SquareOrder n, std::uint64_t seed, RestartBudget max_row_restarts)
{
    RandomSource src(seed);
    return generate(n, src, max_row_restarts);
}

GenerationReport generate_naive(SquareOrder n, RandomSource& src, RestartBudget max_row_restarts)
{
    const auto start = Clock::now();
    const int size = n.value();
    std::vector<int> symbols(static_cast<std::size_t>(size * size), 0);
    std::vector<bool> available(static_cast<std::size_t>(size) + 1);
    std::uint64_t restarts = 0;

    for (int row = 0; row < size; ++row) {
        int col = 0;
        while (col < size) {
            available.assign(available.size(), true);
            for (int i = 0; i < row; ++i) {
                available[symbols[static_cast<std::size_t>(i * size + col)]] = false;
            }
            for (int j = 0; j < col; ++j) {
                available[symbols[static_cast<std::size_t>(row * size + j)]] = false;
            }
            int count = 0;
            for (int s = 1; s <= size; ++s) {
                count += available[s] ? 1 : 0;
            }
            if (count > 0) {
                auto r = static_cast<int>(src.next_below(static_cast<std::uint64_t>(count)));
                int s = 1;
                for (;; ++s) {
                    if (available[s] && r-- == 0) {
                        break;
                    }
                }
                symbols[static_cast<std::size_t>(row * size + col)] = s;
                ++col;
            } else {
                charge_restart(restarts, max_row_restarts, src.seed(), row);
                col = 0;
            }
        }
    }

    std::vector<std::uint64_t> cells(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        cells[i] = std::uint64_t{1} << (symbols[i] - 1);
    }
    return GenerationReport{
        ExponentialLatinSquare::from_cells_unchecked(n, std::move(cells)), src.seed(), restarts,
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)};
}

} // namespace latinsq
