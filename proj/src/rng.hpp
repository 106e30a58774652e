#pragma once

#include <cstdint>

namespace ssnet {

// splitmix64: the 64-bit shift-multiply generator with a Weyl increment of
// 0x9E3779B97F4A7C15. Fixed here so simulation output is bit-reproducible
// across platforms and implementations; the constants below are the whole
// specification.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Bounded draws are plain modulo reduction: bounded(n) = next() % n. The
// modulo bias is below n / 2^64 and irrelevant at the ranges used here, and
// keeping the reduction trivial makes the stream easy to replicate.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace ssnet
