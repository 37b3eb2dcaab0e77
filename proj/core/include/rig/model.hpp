#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace rig {

using VertexId = std::uint32_t;
using AttributeId = std::uint32_t;

inline constexpr double kDefaultEpsilonC = 0.01;

/// Every attribute gets p = sqrt(c / (m n)).
struct UniformModel {
  double c = 0.0;
  std::size_t m = 0;
};

/// p_i = s * i^(-tau), i = 1..m, with s fixed so that n * sum p_i^2 = c.
struct PowerLawModel {
  double tau = 1.0;
  double c = 0.0;
  std::size_t m = 0;
};

struct ExplicitModel {
  std::vector<double> values;
};

using WeightModel = std::variant<UniformModel, PowerLawModel, ExplicitModel>;

struct WeightSpec {
  std::uint32_t n = 0;
  WeightModel model;
};

/// A run of equal attribute probabilities: `count` attributes with p = `value`.
struct WeightGroup {
  double value;
  std::uint64_t count;

  bool operator==(const WeightGroup&) const = default;
};

/// Concrete attribute probabilities for a graph on n vertices, plus the
/// criticality c = n * sum p_i^2 and p_max. Immutable once built.
class AttributeWeights {
 public:
  /// Throws std::invalid_argument if n == 0, p is empty, or an entry is
  /// outside [0, 1] (or NaN).
  AttributeWeights(std::vector<double> p, std::uint32_t n);

  std::span<const double> p() const noexcept { return p_; }
  double p(std::size_t i) const { return p_.at(i); }
  std::size_t m() const noexcept { return p_.size(); }
  std::uint32_t n() const noexcept { return n_; }
  double c() const noexcept { return c_; }
  double p_max() const noexcept { return p_max_; }

  /// Distinct nonzero values with multiplicities, ascending by value.
  std::span<const WeightGroup> groups() const noexcept { return groups_; }

  friend bool operator==(const AttributeWeights&, const AttributeWeights&) = default;

 private:
  std::vector<double> p_;
  std::uint32_t n_;
  double c_;
  double p_max_;
  std::vector<WeightGroup> groups_;
};

/// Realizes a spec. Throws std::invalid_argument for c <= 0, m == 0, n == 0
/// or tau <= 0, and ConstructionError (carrying the index) when a computed
/// probability exceeds 1.
AttributeWeights build_weights(const WeightSpec& spec);

/// n * sum p_i^2 with compensated summation.
double criticality(std::span<const double> p, std::uint32_t n) noexcept;
inline double criticality(const AttributeWeights& w) noexcept { return w.c(); }

enum class Phase { subcritical, critical, supercritical };

const char* to_string(Phase phase) noexcept;

struct RegimeReport {
  double c = 0.0;
  double p_max = 0.0;
  std::uint32_t n = 0;
  /// -ln(p_max) / ln(n), the finite-n exponent with p_max = n^(-gamma).
  /// Absent when p_max is 0 or 1 or n == 1.
  std::optional<double> gamma_witness;
  Phase phase = Phase::subcritical;
  bool theorem2_hypotheses_met = false;
  /// gamma_witness within 0.05 above 1/2: the asymptotic condition is barely
  /// satisfied at this n.
  bool hypothesis_marginal = false;
};

/// Classifies c against 1 +- epsilon_c. Throws std::invalid_argument unless
/// epsilon_c is in (0, 0.5).
RegimeReport regime(double c, double p_max, std::uint32_t n,
                    double epsilon_c = kDefaultEpsilonC);

inline RegimeReport regime(const AttributeWeights& w,
                           double epsilon_c = kDefaultEpsilonC) {
  return regime(w.c(), w.p_max(), w.n(), epsilon_c);
}

}  // namespace rig
