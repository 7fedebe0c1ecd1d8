// Deterministic, portable random number generation.
//
// All randomized routines in this library take an explicit Rng.  The
// generator is a SplitMix64 core with unbiased bounded sampling, so a run
// is reproducible bit-for-bit across platforms and standard libraries
// (std::uniform_int_distribution makes no such promise).  Independent
// streams are derived with stream(); per-sample streams keep results
// independent of evaluation order.
#pragma once

#include <cstdint>

namespace topgen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ull - (~0ull % bound);
        for (;;) {
            std::uint64_t x = next();
            if (x < limit || limit == 0)
                return x % bound;
        }
    }

    bool coin() { return next() & 1u; }

    // Derived stream: deterministic function of (current seed, index),
    // without advancing this generator.
    Rng stream(std::uint64_t index) const {
        Rng r(state_ ^ (0x517cc1b727220a95ull * (index + 1)));
        r.next();
        return r;
    }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x517cc1b727220a95ull * (index + 1)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

} // namespace topgen
