#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sumcq {

// Counter-based PRNG ("splitmix64-ctr", version 1).
//
// Every output word is a pure function of (seed, stream, counter): the
// splitmix64 finalizer applied twice over the mixed key. Substreams derived
// via substream() are statistically independent and reproducible, so parallel
// trials can each own a substream without coordination. No hidden state beyond
// the running counter.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed + kGolden) ^ mix(stream ^ kStreamSalt))) {}

    // Child generator for a named lane (trial index, sender id, message rank, ...).
    CounterRng substream(std::uint64_t lane) const {
        CounterRng child(0, 0);
        child.key_ = mix(key_ ^ mix(lane + kGolden));
        child.counter_ = 0;
        return child;
    }

    std::uint64_t next_u64() { return mix(key_ ^ counter_++); }

    // Uniform integer in [0, bound) without modulo bias (rejection from the top).
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0} / bound));
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return r % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (platform-independent, unlike
    // std::normal_distribution).
    double next_normal() {
        double u1 = next_double();
        while (u1 == 0.0) u1 = next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ull;

    static std::uint64_t mix(std::uint64_t z) {
        z += kGolden;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace sumcq
