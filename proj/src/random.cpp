#include "latinsq/random.hpp"

#include <bit>

namespace latinsq {

RandomSource RandomSource::from_entropy()
{
    std::random_device device;
    const std::uint64_t hi = device();
    const std::uint64_t lo = device();
    return RandomSource((hi << 32) ^ lo);
}

std::uint64_t RandomSource::next_below(std::uint64_t bound)
{
    if (bound == 0) {
        throw Error(Errc::InvalidBound, "next_below requires a positive bound");
    }
    // Values below 2^64 mod bound would make the low residues more likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

int nth_set_bit(std::uint64_t k, int r) noexcept
{
    for (; r > 0; --r) {
        k &= k - 1;
    }
    return std::countr_zero(k);
}

SubsetMask choice(SubsetMask k, RandomSource& src)
{
    return choice(k.bits(), k.order(), src);
}

SubsetMask choice(std::uint64_t k, SquareOrder n, RandomSource& src)
{
    if (k == 0 || (k & ~universe_bits(n.value())) != 0) {
        throw Error(Errc::ChoiceImpossible,
                    "the choice is not possible from mask " + std::to_string(k));
    }
    const auto p = static_cast<std::uint64_t>(std::popcount(k));
    const int r = static_cast<int>(src.next_below(p));
    return singleton(nth_set_bit(k, r) + 1, n);
}

} // namespace latinsq
