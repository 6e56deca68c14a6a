#pragma once

#include <cstdint>

namespace occsym {

/// SplitMix64 generator (Steele, Lea & Flood). Chosen because its output is
/// fully determined by a 64-bit state, so sampled experiments reproduce
/// bit-identically across platforms and thread counts.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, range) with no modulo bias (Lemire reduction with
    /// rejection), so every value is exactly equally likely.
    std::uint64_t bounded(std::uint64_t range) {
        std::uint64_t x = next();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * range;
        std::uint64_t low = static_cast<std::uint64_t>(m);
        if (low < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (low < threshold) {
                x = next();
                m = static_cast<unsigned __int128>(x) * range;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

/// Per-trial seed derivation: the trial-th output of the SplitMix64 stream
/// seeded with `seed`. Workers can jump to any trial without shared state.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace occsym
