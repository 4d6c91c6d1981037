#include "latinsq/enumerate.hpp"

#include <bit>
#include <functional>
#include <future>

namespace latinsq {

namespace {

// Depth-first fill in row-major order with per-row and per-column used masks.
class Backtracker {
public:
    Backtracker(int n, SymbolOrder symbols)
        : n_(n), full_(universe_bits(n)), symbols_(symbols),
          rows_(static_cast<std::size_t>(n), 0), cols_(static_cast<std::size_t>(n), 0),
          cells_(static_cast<std::size_t>(n * n), 0)
    {
    }

    void place(int cell, int symbol)
    {
        const std::uint64_t bit = std::uint64_t{1} << (symbol - 1);
        rows_[cell / n_] |= bit;
        cols_[cell % n_] |= bit;
        cells_[cell] = symbol;
    }

    void unplace(int cell)
    {
        const std::uint64_t bit = std::uint64_t{1} << (cells_[cell] - 1);
        rows_[cell / n_] ^= bit;
        cols_[cell % n_] ^= bit;
        cells_[cell] = 0;
    }

    template <class Visit>
    void run(int cell, Visit&& visit)
    {
        if (cell == n_ * n_) {
            visit(cells_);
            return;
        }
        std::uint64_t free = full_ & ~(rows_[cell / n_] | cols_[cell % n_]);
        while (free != 0) {
            int symbol;
            if (symbols_ == SymbolOrder::Ascending) {
                symbol = std::countr_zero(free) + 1;
            } else {
                symbol = 64 - std::countl_zero(free);
            }
            free &= ~(std::uint64_t{1} << (symbol - 1));
            place(cell, symbol);
            run(cell + 1, visit);
            unplace(cell);
        }
    }

private:
    int n_;
    std::uint64_t full_;
    SymbolOrder symbols_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> cols_;
    std::vector<int> cells_;
};

std::uint64_t count_with_corner(int n, int corner, SymbolOrder symbols)
{
    Backtracker search(n, symbols);
    search.place(0, corner);
    std::uint64_t count = 0;
    search.run(1, [&](const std::vector<int>&) { ++count; });
    return count;
}

} // namespace

std::vector<LatinSquare> enumerate_all(SquareOrder n)
{
    if (n.value() > kMaxEnumerateOrder) {
        throw Error(Errc::OrderTooLargeForEnumeration,
                    "enumeration is limited to order " + std::to_string(kMaxEnumerateOrder));
    }
    std::vector<LatinSquare> out;
    Backtracker search(n.value(), SymbolOrder::Ascending);
    search.run(0, [&](const std::vector<int>& cells) {
        out.push_back(LatinSquare::from_cells_unchecked(n, cells));
    });
    return out;
}

std::uint64_t count_all(SquareOrder n, CountOptions options)
{
    const int limit = options.allow_order_six ? kMaxCountOrderOverride : kMaxCountOrder;
    if (n.value() > limit) {
        throw Error(Errc::OrderTooLargeForEnumeration,
                    "counting is limited to order " + std::to_string(limit));
    }
    std::vector<std::future<std::uint64_t>> parts;
    for (int corner = 1; corner <= n.value(); ++corner) {
        parts.push_back(std::async(std::launch::async, count_with_corner, n.value(), corner,
                                   options.symbols));
    }
    std::uint64_t total = 0;
    for (auto& part : parts) {
        total += part.get();
    }
    return total;
}

} // namespace latinsq
