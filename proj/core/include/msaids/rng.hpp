#pragma once

#include <cstdint>

namespace msaids {

// SplitMix64: the fixed generator behind every simulated stream.
//
// The algorithm is pinned so that a re-implementation in any language
// reproduces event streams bit for bit (see docs/prng.md):
//   state += 0x9e3779b97f4a7c15
//   z = state
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound == 0 yields 0. Uses the multiply-shift
    // reduction (Lemire) which is exact and branch-free.
    uint64_t next_below(uint64_t bound) {
        if (bound == 0) return 0;
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double next_range(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

private:
    uint64_t state_;
};

} // namespace msaids
