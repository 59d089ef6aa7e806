#pragma once

#include <cstdint>

namespace pseudograph {

/// SplitMix64: a counter-based 64-bit generator. The state advances by a
/// fixed odd increment and each output is a bijective mix of the counter,
/// so streams are identical on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Identifier of the seed-splitting rule below, recorded in Monte Carlo output.
inline constexpr const char* kSeedRule = "splitmix64-split-v1";

/// Derives the seed of sub-stream `index` from `master`. Depends only on the
/// pair, never on execution order.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return SplitMix64::mix(master ^ SplitMix64::mix(index + SplitMix64::kGamma));
}

}  // namespace pseudograph
