#pragma once

#include <cmath>
#include <cstdint>

namespace scanstat {

// One SplitMix64 scrambling round (Steele, Lea & Flood's finalizer).
inline uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// SplitMix64 generator: 64-bit state stepped by the golden-ratio increment,
// one scrambling round per output.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform on [0,1) from the top 53 bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // inverse-CDF exponential: -ln(1-U)/lambda with U in [0,1)
    double next_exponential(double lambda) {
        return -std::log1p(-next_unit()) / lambda;
    }
};

// Substream for chunk c of a run seeded with `seed`. The state is a hash of
// (seed, c), so a chunk's draws never depend on which thread ran it or on
// how many chunks preceded it.
inline SplitMix64 chunk_stream(uint64_t seed, uint64_t chunk_index) {
    return SplitMix64(mix64(seed ^ mix64(chunk_index)));
}

}  // namespace scanstat
