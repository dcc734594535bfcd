#pragma once

#include <cstdint>

namespace cot {

// splitmix64 (Steele, Lea, Flood 2014). Pinned here so that every
// consumer of the instance format can reproduce identical streams:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
// Doubles are drawn as (output >> 11) * 2^-53, uniform on [0,1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// splitmix64 finalizer applied to a single word.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Per-trial seed derivation: independent of execution order, so trial
// t always sees the same stream regardless of worker count.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return mix64(seed ^ mix64(trial + 1));
}

}  // namespace cot
