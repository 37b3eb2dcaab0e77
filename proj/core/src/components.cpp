#include "rig/components.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rig/error.hpp"
#include "rig/numeric.hpp"

namespace rig {

DisjointSets::DisjointSets(std::uint32_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t DisjointSets::find(std::uint32_t x) noexcept {
  std::uint32_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::uint32_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSets::unite(std::uint32_t x, std::uint32_t y) noexcept {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  return true;
}

std::vector<std::uint32_t> DisjointSets::set_sizes() {
  std::vector<std::uint32_t> sizes;
  for (std::uint32_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] == v) sizes.push_back(size_[v]);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

ComponentSummary summarize_sizes(std::uint32_t n, std::vector<std::uint32_t> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  ComponentSummary summary;
  summary.n = n;
  summary.count = static_cast<std::uint32_t>(sizes.size());
  summary.largest = sizes.empty() ? 0 : sizes[0];
  summary.second_largest = sizes.size() >= 2 ? sizes[1] : 0;
  summary.sizes = std::move(sizes);
  return summary;
}

ComponentSummary component_sizes(const BipartiteSample& b) {
  DisjointSets sets(b.n());
  for (std::size_t i = 0; i < b.m(); ++i) {
    const auto list = b.members(i);
    for (std::size_t j = 1; j < list.size(); ++j) sets.unite(list[0], list[j]);
  }
  return summarize_sizes(b.n(), sets.set_sizes());
}

ExactSizeDistribution exact_largest_distribution(const AttributeWeights& w) {
  const std::uint32_t n = w.n();
  const std::size_t m = w.m();
  const std::size_t cells = static_cast<std::size_t>(n) * m;
  if (cells > kMaxExactCells) {
    std::ostringstream msg;
    msg << "exact enumeration needs n*m <= " << kMaxExactCells << ", got "
        << n << "*" << m << " = " << cells;
    throw InstanceTooLarge(msg.str());
  }

  // Bit (i * n + v) of a configuration says whether vertex v holds attribute i.
  std::map<std::uint32_t, CompensatedSum> mass;
  const auto p = w.p();
  const std::uint64_t configurations = std::uint64_t{1} << cells;
  std::vector<VertexId> holders;
  for (std::uint64_t config = 0; config < configurations; ++config) {
    double weight = 1.0;
    DisjointSets sets(n);
    for (std::size_t i = 0; i < m && weight != 0.0; ++i) {
      holders.clear();
      for (std::uint32_t v = 0; v < n; ++v) {
        const bool present = (config >> (i * n + v)) & 1u;
        weight *= present ? p[i] : 1.0 - p[i];
        if (present) holders.push_back(v);
      }
      for (std::size_t j = 1; j < holders.size(); ++j) sets.unite(holders[0], holders[j]);
    }
    if (weight == 0.0) continue;
    std::uint32_t largest = 0;
    for (std::uint32_t v = 0; v < n; ++v) largest = std::max(largest, sets.size_of(v));
    mass[largest] += weight;
  }

  ExactSizeDistribution dist;
  dist.n = n;
  dist.m = m;
  for (const auto& [size, acc] : mass) dist.support.emplace(size, acc.value());
  return dist;
}

}  // namespace rig
