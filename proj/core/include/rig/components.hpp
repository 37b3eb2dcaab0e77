#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "rig/model.hpp"
#include "rig/sampler.hpp"

namespace rig {

/// Disjoint sets over [0, n) with union by size and path compression.
class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n);

  std::uint32_t find(std::uint32_t x) noexcept;
  /// Returns true if x and y were in different sets.
  bool unite(std::uint32_t x, std::uint32_t y) noexcept;
  std::uint32_t size_of(std::uint32_t x) noexcept { return size_[find(x)]; }
  std::uint32_t element_count() const noexcept {
    return static_cast<std::uint32_t>(parent_.size());
  }

  /// Sizes of all sets, sorted descending.
  std::vector<std::uint32_t> set_sizes();

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

/// Component sizes of G, isolated vertices included, so sum(sizes) == n.
struct ComponentSummary {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> sizes;  // descending
  std::uint32_t largest = 0;
  std::uint32_t second_largest = 0;  // 0 when count < 2
  std::uint32_t count = 0;
};

ComponentSummary summarize_sizes(std::uint32_t n, std::vector<std::uint32_t> sizes);

/// Components of G computed from B directly: each attribute's members are
/// chained to its first member, never forming the clique.
ComponentSummary component_sizes(const BipartiteSample& b);

/// Exact law of the largest component size of G.
struct ExactSizeDistribution {
  std::uint32_t n = 0;
  std::size_t m = 0;
  std::map<std::uint32_t, double> support;
};

inline constexpr std::size_t kMaxExactCells = 20;

/// Enumerates all 2^(n m) bipartite configurations. Throws InstanceTooLarge
/// when n * m > 20.
ExactSizeDistribution exact_largest_distribution(const AttributeWeights& w);

}  // namespace rig
