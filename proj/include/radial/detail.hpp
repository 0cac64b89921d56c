#pragma once

#include <cstdint>

namespace radial::detail {

/// Counter-based PRNG: every sample index yields the same values no matter
/// how iterations are split across threads.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  /// Stream for the i-th sample of a scan with the given base seed.
  static SplitMix64 for_index(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + (index + 1) * 0x9e3779b97f4a7c15ull);
  }

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace radial::detail
