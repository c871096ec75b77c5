#pragma once

#include <cstdint>

namespace lssl {

// SplitMix64: 64-bit splittable generator. Used for every random choice in
// the library so that runs are reproducible bit-for-bit across platforms
// (std::distributions are not portable).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Derive an independent stream; safe for per-item seeding.
  SplitMix64 split() { return SplitMix64(next_u64()); }

 private:
  uint64_t state_;
};

}  // namespace lssl
