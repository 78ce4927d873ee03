#ifndef NACURVE_RNG_HPP
#define NACURVE_RNG_HPP

#include <cstdint>

namespace nacurve {

// SplitMix64. Hand-rolled so that seeded runs are byte-identical across
// platforms and standard library versions (std distributions are not).
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, n); n > 0. Modulo bias is irrelevant for fuzzing.
    uint64_t below(uint64_t n) { return next() % n; }

    // Uniform-ish in [lo, hi] inclusive.
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }

    // True with probability num/den.
    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

    // Derives an independent stream for instance i; mixing keeps the result
    // order-independent so sharded fuzzing aggregates identically.
    static SplitMix64 for_instance(uint64_t seed, uint64_t index) {
        SplitMix64 mix(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
        mix.next();
        return mix;
    }

private:
    uint64_t state_;
};

}  // namespace nacurve

#endif
