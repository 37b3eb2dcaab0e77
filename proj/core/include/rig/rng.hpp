#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace rig {

/// SplitMix64 finalizer. Used both to expand a 64-bit seed into engine state
/// and to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Stream derivation: seed' = splitmix64(seed ^ splitmix64(stream + 1)).
/// Distinct (seed, stream) pairs give decorrelated engine seeds, so work can
/// be split by stream index without changing any drawn value.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::uint64_t stream) noexcept {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b) noexcept {
  return derive_seed(derive_seed(seed, a), b);
}

/// xoshiro256** (Blackman and Vigna). Satisfies UniformRandomBitGenerator.
/// Cheap to construct, which matters when one engine is created per attribute.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept {
    for (auto& word : state_) {
      seed = splitmix64(seed);
      word = seed;
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by Lemire's multiply-shift rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

/// Draws from Binomial(trials, p). Thin wrapper over std::binomial_distribution
/// with the degenerate cases short-circuited.
std::uint64_t binomial(Xoshiro256& rng, std::uint64_t trials, double p);

/// Uniform k-subset of [0, n) by Floyd's algorithm, written to `out` in
/// ascending order. For k > n/2 the complement is sampled instead.
void sample_subset(Xoshiro256& rng, std::uint32_t n, std::uint32_t k,
                   std::vector<std::uint32_t>& out);

}  // namespace rig
