#pragma once

#include <cstdint>

namespace cs {

// splitmix64: the usual finalizer; all derived randomness in the project
// funnels through these so that runs are reproducible bit-for-bit across
// platforms (no std::distribution, which is implementation-defined).
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mix(uint64_t a, uint64_t b) {
    return splitmix64(a ^ (0x9e3779b97f4a7c15ULL + (b << 1)));
}

inline uint64_t mix(uint64_t a, uint64_t b, uint64_t c) {
    return mix(mix(a, b), c);
}

inline uint64_t mix(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    return mix(mix(a, b, c), d);
}

inline uint64_t mix(uint64_t a, uint64_t b, uint64_t c, uint64_t d, uint64_t e) {
    return mix(mix(a, b, c, d), e);
}

// Small sequential stream for places that need many draws from one key.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // uniform in [0, bound), bound > 0; negligible modulo bias is fine for
    // generator plumbing but not for samplers that tests pin exactly --
    // those use rejection (next_below_exact).
    uint64_t next_below(uint64_t bound) { return next() % bound; }

    uint64_t next_below_exact(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // uniform double in [0,1) with 53 random bits
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

} // namespace cs
