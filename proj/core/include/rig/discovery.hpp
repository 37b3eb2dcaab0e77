#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rig/model.hpp"
#include "rig/sampler.hpp"

namespace rig {

/// Vertex-major transpose of a BipartiteSample: the attributes held by each
/// vertex, ascending. Build once per sample and share read-only.
class VertexAttributeIndex {
 public:
  explicit VertexAttributeIndex(const BipartiteSample& b);

  std::span<const AttributeId> attributes_of(VertexId v) const noexcept {
    return {attributes_.data() + offsets_[v], attributes_.data() + offsets_[v + 1]};
  }
  std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(offsets_.size() - 1); }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<AttributeId> attributes_;
};

struct DiscoveryStep {
  std::size_t index = 0;                     // i, starting at 1
  VertexId vertex = 0;                       // v_i
  std::vector<AttributeId> new_attributes;   // A_i', ascending
  std::uint32_t new_vertices = 0;            // X_i = |V_i'|
  double attribute_weight = 0.0;             // W_i = sum of p_j over A_i'
  std::uint32_t unsaturated = 0;             // |U_i|
};

struct DiscoveryTrace {
  VertexId start = 0;
  std::vector<DiscoveryStep> steps;
  /// 1 + sum X_i: the vertices discovered so far. Equals the size of the
  /// component of `start` when `exhausted`.
  std::uint64_t component_size = 0;
  std::size_t terminated_at = 0;
  /// True when the process stopped because U became empty.
  bool exhausted = false;
};

/// Breadth-first discovery process from `start`: v_i is the oldest
/// unsaturated vertex, A_i' its undiscovered attributes, V_i' the
/// undiscovered holders of A_i'. Stops when U is empty or after max_steps.
/// If `p` is empty, W_i is reported as NaN. Throws std::invalid_argument for
/// an out-of-range start or a p whose length differs from m.
DiscoveryTrace discover(const BipartiteSample& b, const VertexAttributeIndex& index,
                        std::span<const double> p, VertexId start,
                        std::optional<std::size_t> max_steps = std::nullopt);

inline DiscoveryTrace discover(const BipartiteSample& b, const AttributeWeights& w,
                               VertexId start,
                               std::optional<std::size_t> max_steps = std::nullopt) {
  return discover(b, VertexAttributeIndex(b), w.p(), start, max_steps);
}

/// True iff the trace ran at least k_plus steps and |U_k| >= (c - 1) k / 2 for
/// every k in [k_minus, k_plus]. A finite-n diagnostic for the supercritical
/// regime, not a proof check.
bool requires_large_component_witness(const DiscoveryTrace& trace, double c,
                                      std::size_t k_minus, std::size_t k_plus);

/// The window [k_-, k_+] used by the supercritical argument:
/// k_- = max(5 n p c, 125 c) ln n / (c - 1)^2 and k_+ = n^gamma. Diagnostic only.
struct WitnessWindow {
  std::size_t k_minus;
  std::size_t k_plus;
};
WitnessWindow witness_window(std::uint32_t n, double c, double p_max, double gamma);

}  // namespace rig
