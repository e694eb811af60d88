#pragma once

#include <cstdint>

namespace bipartify {

// One splitmix64 step; used for seeding and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Seed of an independent sub-stream, derived from (base, tag).
/// Chaining calls gives the documented stream rule: the experiment pipeline
/// derives (master seed -> model -> instance -> purpose) one tag at a time,
/// so adding or removing methods never perturbs any other stream.
inline std::uint64_t derive_stream(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t state = base;
    (void)splitmix64(state);
    state ^= 0x632be59bd9b4e019ull * (tag + 1);
    return splitmix64(state);
}

/// xoshiro256** generator: 256-bit state, seedable, reproducible.
/// Sub-streams come from derive_stream, never from jumping.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, bound); bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Fair coin; consumes exactly one generator step.
    bool coin() { return (next() >> 63) != 0; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

}  // namespace bipartify
