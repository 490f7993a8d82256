#pragma once

#include <cstdint>

namespace brp {

/// SplitMix64 output function applied to `x + 0x9E3779B97F4A7C15`.
/// Used for seeding and for deriving per-instance streams.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xorshift64* generator (Marsaglia shifts 12/25/27, multiplier 0x2545F4914F6CDD1D).
///
/// The state is `splitmix64(seed)`, replaced by 0x9E3779B97F4A7C15 if that is zero.
/// `below(k)` draws uniformly from [0, k) by rejecting raw outputs smaller than
/// `2^64 mod k` and returning `r mod k`. Every step is integer-only, so any
/// language reproduces the same stream bit-for-bit.
class Xorshift64Star {
public:
    explicit constexpr Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed))
    {
        if (state_ == 0) {
            state_ = 0x9E3779B97F4A7C15ULL;
        }
    }

    constexpr std::uint64_t next()
    {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    constexpr std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    /// Bernoulli draw with probability num/den.
    constexpr bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

} // namespace brp
