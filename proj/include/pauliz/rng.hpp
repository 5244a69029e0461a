#pragma once

#include <cstdint>

namespace pauliz {

/// Splittable counter-based pseudo-random generator.
///
/// Every (seed, stream) pair yields a statistically independent sequence:
/// the stream id selects an odd additive constant ("gamma") and a distinct
/// starting state, after which each draw is one add plus a 64-bit mix.
/// Assigning stream = shot index makes Monte Carlo runs reproducible
/// regardless of how shots are distributed over workers.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) {
    state_ = mix64(seed ^ mix64(stream + 0x9E3779B97F4A7C15ULL));
    gamma_ = mix64(stream ^ mix64(seed + 0xBF58476D1CE4E5B9ULL)) | 1ULL;
  }

  std::uint64_t next_u64() {
    state_ += gamma_;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

 private:
  std::uint64_t state_;
  std::uint64_t gamma_;
};

}  // namespace pauliz
