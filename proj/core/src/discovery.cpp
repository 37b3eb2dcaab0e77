#include "rig/discovery.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace rig {

VertexAttributeIndex::VertexAttributeIndex(const BipartiteSample& b)
    : offsets_(static_cast<std::size_t>(b.n()) + 1, 0) {
  for (std::size_t i = 0; i < b.m(); ++i) {
    for (VertexId v : b.members(i)) ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < b.n(); ++v) offsets_[v + 1] += offsets_[v];
  attributes_.resize(offsets_.back());
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Attributes are visited in increasing order, so each vertex's list is sorted.
  for (std::size_t i = 0; i < b.m(); ++i) {
    for (VertexId v : b.members(i)) attributes_[cursor[v]++] = static_cast<AttributeId>(i);
  }
}

DiscoveryTrace discover(const BipartiteSample& b, const VertexAttributeIndex& index,
                        std::span<const double> p, VertexId start,
                        std::optional<std::size_t> max_steps) {
  if (start >= b.n()) throw std::invalid_argument("start vertex out of range");
  if (!p.empty() && p.size() != b.m()) {
    throw std::invalid_argument("weight vector length does not match attribute count");
  }

  std::vector<bool> vertex_seen(b.n(), false);
  std::vector<bool> attribute_seen(b.m(), false);
  std::deque<VertexId> unsaturated{start};
  vertex_seen[start] = true;

  DiscoveryTrace trace;
  trace.start = start;
  trace.component_size = 1;
  const std::size_t limit = max_steps.value_or(std::numeric_limits<std::size_t>::max());

  while (!unsaturated.empty() && trace.steps.size() < limit) {
    DiscoveryStep step;
    step.index = trace.steps.size() + 1;
    step.vertex = unsaturated.front();
    unsaturated.pop_front();

    for (AttributeId a : index.attributes_of(step.vertex)) {
      if (!attribute_seen[a]) {
        attribute_seen[a] = true;
        step.new_attributes.push_back(a);
      }
    }
    double weight = 0.0;
    for (AttributeId a : step.new_attributes) {
      if (!p.empty()) weight += p[a];
      for (VertexId u : b.members(a)) {
        if (!vertex_seen[u]) {
          vertex_seen[u] = true;
          unsaturated.push_back(u);
          ++step.new_vertices;
        }
      }
    }
    step.attribute_weight = p.empty() ? std::numeric_limits<double>::quiet_NaN() : weight;
    step.unsaturated = static_cast<std::uint32_t>(unsaturated.size());
    trace.component_size += step.new_vertices;
    trace.steps.push_back(std::move(step));
  }
  trace.terminated_at = trace.steps.size();
  trace.exhausted = unsaturated.empty();
  return trace;
}

bool requires_large_component_witness(const DiscoveryTrace& trace, double c,
                                      std::size_t k_minus, std::size_t k_plus) {
  if (k_plus == 0 || trace.terminated_at < k_plus) return false;
  const std::size_t first = std::max<std::size_t>(k_minus, 1);
  for (std::size_t k = first; k <= k_plus; ++k) {
    const double needed = (c - 1.0) * static_cast<double>(k) / 2.0;
    if (static_cast<double>(trace.steps[k - 1].unsaturated) < needed) return false;
  }
  // Reaching k_plus steps already implies U was nonempty before step k_plus.
  return true;
}

WitnessWindow witness_window(std::uint32_t n, double c, double p_max, double gamma) {
  const double nn = static_cast<double>(n);
  const double log_n = std::log(nn);
  const double gap = (c - 1.0) * (c - 1.0);
  const double k_minus = std::max(5.0 * nn * p_max * c, 125.0 * c) * log_n / gap;
  return {static_cast<std::size_t>(std::ceil(k_minus)),
          static_cast<std::size_t>(std::ceil(std::pow(nn, gamma)))};
}

}  // namespace rig
