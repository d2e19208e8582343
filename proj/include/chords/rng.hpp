#pragma once

#include <cstdint>

namespace chords {

// Counter-based 64-bit generator (SplitMix64 output function applied to a
// keyed counter).  A (seed, stream) pair fully determines the output
// sequence, so replicates can draw from disjoint substreams regardless of
// scheduling order.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream = 0)
        : key_(mix(mix(seed) + mix(stream * 0x9E3779B97F4A7C15ULL + 1))), counter_(0) {}

    uint64_t next() {
        uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        return mix(z);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound), bound >= 1
    uint64_t uniform_below(uint64_t bound) {
        // Lemire's multiply-shift with rejection of the biased zone.
        uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        uint64_t l = static_cast<uint64_t>(m);
        if (l < bound) {
            uint64_t t = (0 - bound) % bound;
            while (l < t) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                l = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t key_;
    uint64_t counter_;
};

}  // namespace chords
