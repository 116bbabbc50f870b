#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace blackbody {

// The generator is pinned to a published algorithm (xoshiro256** seeded via
// splitmix64) instead of <random> engines + distributions because the
// standard does not pin distribution output; this way identical seeds give
// identical streams on every platform and toolchain.

/// splitmix64 step (Steele/Lea/Flood; public-domain reference constants).
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** 1.0 (Blackman/Vigna, public-domain reference algorithm),
/// state filled from splitmix64 as its authors recommend.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64_next(sm);
    }

    using result_type = std::uint64_t;
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

    std::uint64_t operator()() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

/// Unbiased draw from [0, bound) by Lemire's multiply-shift with rejection
/// of the short strip; bound must be nonzero.
inline std::uint64_t uniform_below(Xoshiro256& rng, std::uint64_t bound) {
    __uint128_t m = static_cast<__uint128_t>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        while (low < threshold) {
            m = static_cast<__uint128_t>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

/// Uniform on [0, 1) with 53 bits.
inline double uniform_double(Xoshiro256& rng) { return (rng() >> 11) * 0x1.0p-53; }

/// Standard normal by Box-Muller; consumes exactly two uniforms per value
/// (the sine companion is discarded to keep the stream layout trivial).
inline double standard_normal(Xoshiro256& rng) {
    const double u1 = 1.0 - uniform_double(rng);  // (0, 1], keeps log finite
    const double u2 = uniform_double(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Seed for shard `stream` of a sharded computation: fold the index in with
/// an odd multiplier, then one splitmix64 finalization. Documented so shards
/// are reproducible independently of worker scheduling.
inline std::uint64_t derive_substream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0xd1342543de82ef95ULL * (stream + 1));
    return splitmix64_next(s);
}

}  // namespace blackbody
