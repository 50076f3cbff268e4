#pragma once

#include <cstdint>
#include <random>

namespace qtcss {

/// Deterministic randomness source. Every random choice in the library flows
/// through this wrapper so a 64-bit seed fixes all outcomes bit-exactly across
/// platforms: mt19937_64 output is pinned by the C++ standard, and the bounded
/// and unit helpers below avoid std::uniform_*_distribution, whose mapping is
/// implementation-defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, bound). Rejection sampling, unbiased for any bound >= 1.
    std::uint64_t next_below(std::uint64_t bound)
    {
        if (bound <= 1)
            return 0;
        const std::uint64_t rem = (-bound) % bound; // 2^64 mod bound
        std::uint64_t r = next_u64();
        while (r < rem)
            r = next_u64();
        return r % bound;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace qtcss
