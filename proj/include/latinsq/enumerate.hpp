// enumerate.hpp -- exhaustive enumeration and counting of small Latin squares.
//
// Shares nothing with the generator beyond the mask representation, so the
// two can check each other.

#pragma once

#include <cstdint>
#include <vector>

#include "latinsq/square.hpp"

namespace latinsq {

inline constexpr int kMaxEnumerateOrder = 4;
inline constexpr int kMaxCountOrder = 5;
inline constexpr int kMaxCountOrderOverride = 6;

enum class SymbolOrder { Ascending, Descending };

struct CountOptions {
    /// Order in which candidate symbols are tried at each cell.
    SymbolOrder symbols = SymbolOrder::Ascending;
    /// Admit n = 6 (812851200 squares; minutes of CPU).
    bool allow_order_six = false;
};

/// Every Latin square of order n <= 4, lexicographic by rows.
/// Throws Error(OrderTooLargeForEnumeration) above 4.
std::vector<LatinSquare> enumerate_all(SquareOrder n);

/// Number of Latin squares of order n <= 5 (6 with allow_order_six).
/// Work is split across threads by the value of the top-left cell.
/// Throws Error(OrderTooLargeForEnumeration) above the limit.
std::uint64_t count_all(SquareOrder n, CountOptions options = {});

} // namespace latinsq
