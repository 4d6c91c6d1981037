// mask_set.hpp -- subsets of [n] = {1, ..., n} stored as one unsigned word.
//
// Symbol i maps to bit i-1, bits are numbered from the right starting at 0,
// so a set A is the integer sum of 2^(i-1) over its members. The empty set
// is 0 and [n] itself is 2^n - 1.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "latinsq/error.hpp"

namespace latinsq {

/// Number of symbols (and rows, and columns) of a square. Always in [1, 64].
class SquareOrder {
public:
    static constexpr int kMax = 64;

    /// Throws Error(OrderTooLarge) when n is outside [1, 64].
    explicit constexpr SquareOrder(int n) : n_(n)
    {
        if (n < 1 || n > kMax) {
            throw_out_of_range(n);
        }
    }

    constexpr int value() const noexcept { return n_; }

    friend constexpr auto operator<=>(SquareOrder, SquareOrder) = default;

private:
    [[noreturn]] static void throw_out_of_range(int n);

    int n_;
};

/// Integer representation of a subset of [n].
class SubsetMask {
public:
    /// Wraps raw bits. Throws Error(MaskOutOfRange) if bits has anything set
    /// at or above position n.
    static SubsetMask from_bits(std::uint64_t bits, SquareOrder n);

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr SquareOrder order() const noexcept { return order_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

private:
    constexpr SubsetMask(std::uint64_t bits, SquareOrder n) noexcept : bits_(bits), order_(n) {}

    friend SubsetMask universe(SquareOrder);
    friend SubsetMask singleton(int, SquareOrder);
    friend SubsetMask set_union(SubsetMask, SubsetMask);
    friend SubsetMask remove_subset(SubsetMask, SubsetMask);
    friend SubsetMask complement_in_universe(SubsetMask);

    std::uint64_t bits_;
    SquareOrder order_;
};

/// 2^n - 1 without overflowing the shift at n = 64.
constexpr std::uint64_t universe_bits(int n) noexcept
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// [n] itself.
inline SubsetMask universe(SquareOrder n)
{
    return SubsetMask(universe_bits(n.value()), n);
}

/// {a}, i.e. 2^(a-1). Throws Error(SymbolOutOfRange) unless 1 <= a <= n.
SubsetMask singleton(int a, SquareOrder n);

/// Mask of the given symbols. Duplicates are ignored.
/// Throws Error(SymbolOutOfRange) for any element outside [n].
SubsetMask encode(std::span<const int> elements, SquareOrder n);
SubsetMask encode(std::initializer_list<int> elements, SquareOrder n);

/// Members of the set in ascending order.
std::vector<int> decode(SubsetMask m);

/// Whether symbol i is a member. Throws Error(SymbolOutOfRange) unless 1 <= i <= order.
bool contains(SubsetMask m, int i);

inline int popcount(SubsetMask m) noexcept
{
    return std::popcount(m.bits());
}

/// Binary digits of |x| without leading zeros; "0" for zero.
std::string to_binary_string(std::int64_t x);

/// Bitwise inclusive OR. Throws Error(OrderMismatch) if the orders differ.
inline SubsetMask set_union(SubsetMask a, SubsetMask b)
{
    if (a.order() != b.order()) {
        throw Error(Errc::OrderMismatch, "union of masks over different orders");
    }
    return SubsetMask(a.bits() | b.bits(), a.order());
}

/// B \ A computed as B ^ A. Requires A to be a subset of B; otherwise throws
/// Error(NotASubset) rather than returning the symmetric difference.
inline SubsetMask remove_subset(SubsetMask b, SubsetMask a)
{
    if (a.order() != b.order()) {
        throw Error(Errc::OrderMismatch, "difference of masks over different orders");
    }
    if ((a.bits() & ~b.bits()) != 0) {
        throw Error(Errc::NotASubset, "mask " + std::to_string(a.bits()) +
                                          " is not a subset of " + std::to_string(b.bits()));
    }
    return SubsetMask(b.bits() ^ a.bits(), b.order());
}

/// [n] \ m, the availability mask U ^ A.
inline SubsetMask complement_in_universe(SubsetMask m)
{
    return SubsetMask(universe_bits(m.order().value()) ^ m.bits(), m.order());
}

} // namespace latinsq
