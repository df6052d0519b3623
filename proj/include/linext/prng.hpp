#pragma once

#include <cstdint>

namespace linext {

/// Splitmix64: tiny, explicitly specified generator so that seeded runs are
/// reproducible across platforms and implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) via multiply-shift. The O(bound/2^64) bias is
  /// irrelevant for the sample sizes used here and keeps the draw branch-free.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Bernoulli with probability p (clamped to [0,1]).
  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
  }

 private:
  std::uint64_t state_;
};

}  // namespace linext
