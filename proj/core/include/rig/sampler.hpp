#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rig/model.hpp"

namespace rig {

/// One realization of the bipartite graph B, stored attribute-major in CSR
/// form: members(i) is the strictly increasing list of vertices holding
/// attribute i.
class BipartiteSample {
 public:
  BipartiteSample() = default;

  /// Takes ownership of CSR arrays. Throws std::invalid_argument if offsets
  /// are malformed or a member list is not strictly increasing within [0, n).
  BipartiteSample(std::uint32_t n, std::uint64_t seed,
                  std::vector<std::uint64_t> offsets,
                  std::vector<VertexId> members);

  static BipartiteSample from_lists(std::uint32_t n, std::uint64_t seed,
                                    const std::vector<std::vector<VertexId>>& attrs);

  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t m() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }

  std::span<const VertexId> members(std::size_t attribute) const noexcept {
    return {members_.data() + offsets_[attribute],
            members_.data() + offsets_[attribute + 1]};
  }

  /// Number of (vertex, attribute) edges of B.
  std::uint64_t edge_count() const noexcept { return members_.size(); }

  std::vector<std::vector<VertexId>> to_lists() const;

  friend bool operator==(const BipartiteSample&, const BipartiteSample&) = default;

 private:
  std::uint32_t n_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> members_;
};

struct SampleOptions {
  /// Attribute blocks are drawn on this many threads; the output does not
  /// depend on it.
  unsigned workers = 1;
};

/// Draws B. Attribute i uses its own engine seeded with derive_seed(seed, i):
/// first k ~ Binomial(n, p_i), then a uniform k-subset of [0, n). This has
/// the same law as n independent Bernoulli(p_i) trials at O(k) cost.
BipartiteSample sample_bipartite(const AttributeWeights& w, std::uint64_t seed,
                                 SampleOptions options = {});

/// The projection G: an edge joins two vertices sharing an attribute.
struct ProjectedGraph {
  std::uint32_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, sorted, unique
};

/// Materializes every attribute clique. Quadratic in clique size; meant for
/// small instances and inspection.
ProjectedGraph project(const BipartiteSample& b);

/// "u v" per line, sorted.
std::string to_edge_list(const ProjectedGraph& g);

}  // namespace rig
