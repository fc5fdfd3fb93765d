#pragma once

#include <cstdint>

namespace nwl {

/// Splitmix-style 64-bit generator.
///
/// Tiny, seedable, and fully deterministic across platforms, which is what we
/// need for reproducible sampling: the same (seed, circuit, shots) triple must
/// give bit-identical histograms everywhere. Quality is more than adequate for
/// multinomial draws and parameter initialisation.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_double(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

  private:
    std::uint64_t state_;
};

} // namespace nwl
