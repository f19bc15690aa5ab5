#pragma once

#include <cstdint>

namespace simforest {

// Default seed for every seeded computation (CLI weighted checks, sampled
// identity verification).  Runs with equal seed and input are byte-stable.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// SplitMix64: tiny, portable, deterministic across platforms (standard
// library distributions are implementation-defined, so they are avoided).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  // Uniform integer in [lo, hi], inclusive.
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next_below(
                    static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace simforest
