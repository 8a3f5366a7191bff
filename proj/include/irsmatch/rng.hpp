#pragma once

#include <cstdint>

namespace irsmatch {

// SplitMix64 (Steele/Lea/Flood). Chosen over std engines because its output
// stream is fully specified by the seed and identical on every platform,
// which is what makes scenario generation reproducible across languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 bits of precision.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; used where a strictly positive draw is required.
  double uniform01_open_low() { return 1.0 - uniform01(); }

  // Uniform integer in [0, n). Modulo bias is irrelevant here (n << 2^64)
  // and keeps the mapping trivially reproducible.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace irsmatch
