#include "latinsq/mask_set.hpp"

#include <algorithm>

namespace latinsq {

namespace {

void check_symbol(int a, SquareOrder n)
{
    if (a < 1 || a > n.value()) {
        throw Error(Errc::SymbolOutOfRange, "symbol " + std::to_string(a) + " is outside [1, " +
                                                std::to_string(n.value()) + "]");
    }
}

} // namespace

void SquareOrder::throw_out_of_range(int n)
{
    throw Error(Errc::OrderTooLarge,
                "order " + std::to_string(n) + " is outside [1, " + std::to_string(kMax) + "]");
}

SubsetMask SubsetMask::from_bits(std::uint64_t bits, SquareOrder n)
{
    if ((bits & ~universe_bits(n.value())) != 0) {
        throw Error(Errc::MaskOutOfRange, "mask " + std::to_string(bits) +
                                              " has bits outside [" + std::to_string(n.value()) +
                                              "]");
    }
    return SubsetMask(bits, n);
}

SubsetMask singleton(int a, SquareOrder n)
{
    check_symbol(a, n);
    return SubsetMask(std::uint64_t{1} << (a - 1), n);
}

SubsetMask encode(std::span<const int> elements, SquareOrder n)
{
    std::uint64_t bits = 0;
    for (int a : elements) {
        check_symbol(a, n);
        bits |= std::uint64_t{1} << (a - 1);
    }
    return SubsetMask::from_bits(bits, n);
}

SubsetMask encode(std::initializer_list<int> elements, SquareOrder n)
{
    return encode(std::span<const int>(elements.begin(), elements.size()), n);
}

std::vector<int> decode(SubsetMask m)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for (std::uint64_t rest = m.bits(); rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

bool contains(SubsetMask m, int i)
{
    check_symbol(i, m.order());
    return (m.bits() >> (i - 1)) & 1u;
}

std::string to_binary_string(std::int64_t x)
{
    // Negate in unsigned arithmetic so INT64_MIN is well defined.
    std::uint64_t v = static_cast<std::uint64_t>(x);
    if (x < 0) {
        v = ~v + 1;
    }
    if (v == 0) {
        return "0";
    }
    std::string out;
    for (int d = std::bit_width(v); d > 0; --d) {
        out.push_back(((v >> (d - 1)) & 1u) ? '1' : '0');
    }
    return out;
}

} // namespace latinsq
