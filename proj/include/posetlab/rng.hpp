#pragma once

#include <cstdint>

namespace posetlab {

// Counter-based generator: output i of a stream is a SplitMix64-style mix of
// (key, i), so any (seed, stream, counter) triple is reproducible on every
// platform and streams can be split without coordination.
struct Rng {
    std::uint64_t key = 0;
    std::uint64_t ctr = 0;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        key = mix(seed + 0x9E3779B97F4A7C15ull * (stream + 1));
    }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return mix(key + (++ctr) * 0xD2B74407B1CE6E93ull); }

    // Uniform in [0, bound), unbiased by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t r;
        do { r = next(); } while (r > limit);
        return r % bound;
    }

    // Uniform in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    Rng split(std::uint64_t stream) const {
        Rng r(key, stream + 0x632BE59BD9B4E019ull);
        return r;
    }
};

} // namespace posetlab
