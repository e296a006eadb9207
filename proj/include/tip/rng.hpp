#pragma once

#include <cmath>
#include <cstdint>

namespace tip {

// Every stochastic component draws from its own named sub-stream derived
// from the run seed, so adding or removing one consumer never perturbs the
// draws seen by another.
inline constexpr std::uint64_t kStreamLabels = 1;
inline constexpr std::uint64_t kStreamDomains = 2;
inline constexpr std::uint64_t kStreamArrivals = 3;
inline constexpr std::uint64_t kStreamPolicy = 4;
inline constexpr std::uint64_t kStreamEstimator = 5;
inline constexpr std::uint64_t kStreamReplication = 6;

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer: full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for a named sub-stream of a base seed.
constexpr std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream) {
    return mix64(base + kGolden * (stream + 1));
}

/// Order-sensitive combination of two 64-bit values.
constexpr std::uint64_t hash2(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (mix64(b) + kGolden));
}

/// Map a hash to the unit interval [0, 1) using the top 53 bits.
constexpr double unit_from_hash(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Deterministic SplitMix64 engine. The standard <random> distributions are
/// implementation-defined, so all draws are derived here by hand to keep
/// reports bit-stable across compilers.
class Rng {
public:
    explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next_u64() {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform draw in [0, 1).
    double next_unit() { return unit_from_hash(next_u64()); }

    /// Unbiased uniform draw in [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        // Lemire multiply-shift with rejection.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Exponential draw with unit mean.
    double exponential() { return -std::log(1.0 - next_unit()); }

private:
    std::uint64_t state_;
};

}  // namespace tip
