#ifndef DELTAY_RNG_HPP
#define DELTAY_RNG_HPP

#include <cstdint>

namespace deltay {

// Deterministic splittable generator (splitmix64). Used everywhere instead of
// std:: distributions so that identical seeds give identical output on every
// platform.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Unbiased when n divides 2^64 (all our box sizes do);
    // otherwise the modulo bias is irrelevant for sampling purposes.
    uint64_t below(uint64_t n) { return next() % n; }

    // Derive an independent stream, e.g. one per trial.
    static uint64_t derive(uint64_t base, uint64_t salt) {
        Rng r(base ^ (0x517cc1b727220a95ull * (salt + 1)));
        r.next();
        return r.next();
    }
};

} // namespace deltay

#endif
