#pragma once

#include <cstdint>
#include <stdexcept>

namespace cvhnn {

/// Counter-based 64-bit generator with independent streams.
///
/// Draw k of stream (seed, stream) is finalize(key + k * golden), where
/// key = finalize(finalize(seed) ^ (stream * odd_constant)) and finalize is
/// the SplitMix64 output mixer. Everything is integer arithmetic, so a given
/// (seed, stream) yields the same sequence on every platform.
class SeededRng {
public:
    SeededRng(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream), key_(mix(mix(seed) ^ (stream * 0xD1B54A32D192ED03ULL))) {}

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t stream() const { return stream_; }
    [[nodiscard]] std::uint64_t draws() const { return counter_; }

    std::uint64_t next_u64() {
        ++counter_;
        return mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer on the closed interval [lo, hi], unbiased (rejection).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == ~0ULL) return static_cast<std::int64_t>(next_u64());
        const std::uint64_t range = span + 1;
        // Accept only the top multiple-of-range slice of [0, 2^64).
        const std::uint64_t floor = (0 - range) % range;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x < floor);
        return lo + static_cast<std::int64_t>(x % range);
    }

    /// Fair coin.
    bool bit() { return (next_u64() >> 63) != 0; }

private:
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace cvhnn
