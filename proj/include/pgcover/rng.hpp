#pragma once

#include <cstdint>

namespace pgcover {

/// Counter-friendly splitmix64 generator. All randomness in the library
/// flows from one user seed through derived streams, so runs replay
/// byte-identically regardless of thread count.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0. Rejection sampling keeps it exact.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

/// Derive an independent stream for (seed, index), e.g. one per sample.
inline SplitMix64 derived_stream(uint64_t seed, uint64_t index) {
    SplitMix64 g(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
    g.next();
    return g;
}

} // namespace pgcover
