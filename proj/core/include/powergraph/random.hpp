#pragma once

#include <cstdint>

namespace powergraph {

/// SplitMix64 finalizer (Steele, Lea & Flood). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of the `index`-th derived stream:
///   mix64(seed + 0x9E3779B97F4A7C15 * (index + 1))
/// Used for per-trial seeds so results do not depend on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::uint64_t index) noexcept {
  return mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// SplitMix64 stream. The state advances by the golden-ratio increment and
/// each output is mix64(state). Uniform doubles take the top 53 bits.
///
/// Not shared between threads; each worker owns its own instance.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform on [0, 1).
  double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // UniformRandomBitGenerator surface so <random> distributions and
  // std::shuffle accept it.
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept { return next_u64(); }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace powergraph
