#pragma once

#include <cstdint>

namespace cubecop {

// Counter-style splitmix64 generator. Fully specified here so that streams
// are bit-identical across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound). Rejection sampling, no modulo bias.
    uint32_t below(uint32_t bound) {
        uint64_t threshold = (0 - uint64_t(bound)) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return uint32_t(r % bound);
        }
    }

private:
    uint64_t state_;
};

// Deterministic seed derivation for per-trial streams; sharding a trial range
// never changes the stream any trial sees.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    return mix_seed(mix_seed(a, b, c), d);
}

}  // namespace cubecop
