#pragma once

#include <cstdint>
#include <vector>

namespace riccigap {

/// SplitMix64: a 64-bit-state counter-based generator (Weyl sequence plus a
/// finalizing mix). Chosen because the stream is a pure function of the seed
/// and the step index, so any language can reproduce it from this definition:
///
///   state_{n+1} = state_n + 0x9E3779B97F4A7C15
///   output_n    = mix64(state_{n+1})
///
/// where mix64 is the finalizer in mix64() below.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return mix64(state_ += 0x9E3779B97F4A7C15ULL); }

  /// Unbiased uniform draw in [0, n), n >= 1, by classic modulo rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Independent substream derivation used for retry attempts and parallel
/// trials: sub_seed(seed, k) = mix64(seed ^ (mix64(k) + 0x9E3779B97F4A7C15)).
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix64(seed ^ (SplitMix64::mix64(index) + 0x9E3779B97F4A7C15ULL));
}

}  // namespace riccigap
