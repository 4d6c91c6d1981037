// random.hpp -- seedable random source and uniform choice of a set bit.

#pragma once

#include <cstdint>
#include <random>

#include "latinsq/mask_set.hpp"

namespace latinsq {

/// Deterministic stream of uniform 64-bit words.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so a given seed yields the same stream on every conforming
/// build. Bounded draws use rejection sampling rather than
/// std::uniform_int_distribution (whose algorithm is implementation defined).
///
/// Single owner: not safe to share between threads without synchronization.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    /// Seed drawn from std::random_device.
    static RandomSource from_entropy();

    /// Seed for task `index` of a batch started from `seed`: seed + index, mod 2^64.
    static constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept
    {
        return seed + index;
    }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Exactly uniform on [0, bound). Throws Error(InvalidBound) for bound == 0.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Picks one member of k uniformly and returns it as a singleton.
///
/// With p = popcount(k) and r = next_below(p) + 1, the result is the r-th set
/// bit of k counting upward from bit 0. Throws Error(ChoiceImpossible) when
/// k is empty.
SubsetMask choice(SubsetMask k, RandomSource& src);

/// Raw-word form of choice(). Also throws Error(ChoiceImpossible) when k has
/// bits beyond [n].
SubsetMask choice(std::uint64_t k, SquareOrder n, RandomSource& src);

/// Bit index of the r-th (0-based) set bit of k, scanning upward. k must have
/// more than r set bits.
int nth_set_bit(std::uint64_t k, int r) noexcept;

} // namespace latinsq
