#pragma once

#include <cstdint>

namespace liftlab {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators"). This is the only random source in the library: every
// randomized feature takes an explicit 64-bit seed and is reproducible
// bit-for-bit across runs and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t lim = bound * (~0ULL / bound);
        std::uint64_t u;
        do {
            u = next();
        } while (u >= lim);
        return u % bound;
    }

    // Independent per-trial stream: state = finalize(seed) ^ finalize(trial+1),
    // where finalize is the SplitMix64 output mix. Trials can therefore be
    // sampled in parallel or out of order with identical results.
    static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial) {
        return SplitMix64(finalize(seed) ^ finalize(trial + 1));
    }

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace liftlab
