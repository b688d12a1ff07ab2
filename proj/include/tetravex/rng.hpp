#pragma once

#include <cstdint>

namespace tvx {

/// SplitMix64 (Steele, Lea & Flood 2014), version 1 of this project's
/// stream. The output sequence for a given seed is part of the file-format
/// contract: generated instances and experiment CSVs depend on it.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
  constexpr std::uint64_t uniform(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Seed for trial `index` of a run seeded with `seed`: the SplitMix64
/// finalizer applied to seed XOR the index's golden-ratio multiple.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64::mix(seed ^ (index * 0x9E3779B97F4A7C15ULL));
}

}  // namespace tvx
