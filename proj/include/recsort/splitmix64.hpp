#pragma once

#include <cstdint>

namespace recsort {

// SplitMix64 (Vigna's fixed-increment SplittableRandom variant). One 64-bit
// state word, one output per step; integer-only, so generated datasets are
// bit-identical across platforms and languages.
class Splitmix64 {
 public:
  explicit constexpr Splitmix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1): the top 53 bits over 2^53.
  constexpr double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// One mixing step; used to derive independent per-case streams from a base
// seed without sharing state.
constexpr std::uint64_t splitmix64_mix(std::uint64_t seed,
                                       std::uint64_t index) noexcept {
  return Splitmix64(seed + index).next();
}

}  // namespace recsort
