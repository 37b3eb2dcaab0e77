#include "rig/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rig/error.hpp"
#include "rig/numeric.hpp"

namespace rig {

namespace {

std::vector<WeightGroup> group_values(std::span<const double> p) {
  std::vector<double> sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<WeightGroup> groups;
  for (double v : sorted) {
    if (v == 0.0) continue;
    if (!groups.empty() && groups.back().value == v) {
      ++groups.back().count;
    } else {
      groups.push_back({v, 1});
    }
  }
  return groups;
}

void require_probability(double value, std::size_t index) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << "attribute probability p[" << index << "] = " << value
        << " is outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
}

void check_constructed(const std::vector<double>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] <= 1.0)) {
      std::ostringstream msg;
      msg << "constructed probability p[" << i << "] = " << p[i]
          << " exceeds 1";
      throw ConstructionError(msg.str(), i);
    }
  }
}

std::vector<double> uniform_vector(const UniformModel& u, std::uint32_t n) {
  if (!(u.c > 0.0)) throw std::invalid_argument("uniform model requires c > 0");
  if (u.m == 0) throw std::invalid_argument("uniform model requires m >= 1");
  const double value =
      std::sqrt(u.c / (static_cast<double>(u.m) * static_cast<double>(n)));
  std::vector<double> p(u.m, value);
  check_constructed(p);
  return p;
}

std::vector<double> power_law_vector(const PowerLawModel& pl, std::uint32_t n) {
  if (!(pl.c > 0.0)) throw std::invalid_argument("power-law model requires c > 0");
  if (pl.m == 0) throw std::invalid_argument("power-law model requires m >= 1");
  if (!(pl.tau > 0.0)) throw std::invalid_argument("power-law model requires tau > 0");

  std::vector<double> shape(pl.m);
  CompensatedSum sq;
  for (std::size_t i = 0; i < pl.m; ++i) {
    shape[i] = std::pow(static_cast<double>(i + 1), -pl.tau);
    sq += shape[i] * shape[i];
  }
  const double scale = std::sqrt(pl.c / (static_cast<double>(n) * sq.value()));
  for (double& v : shape) v *= scale;
  check_constructed(shape);
  return shape;
}

}  // namespace

AttributeWeights::AttributeWeights(std::vector<double> p, std::uint32_t n)
    : p_(std::move(p)), n_(n) {
  if (n_ == 0) throw std::invalid_argument("vertex count n must be >= 1");
  if (p_.empty()) throw std::invalid_argument("attribute count m must be >= 1");
  for (std::size_t i = 0; i < p_.size(); ++i) require_probability(p_[i], i);
  c_ = criticality(p_, n_);
  p_max_ = *std::max_element(p_.begin(), p_.end());
  groups_ = group_values(p_);
}

AttributeWeights build_weights(const WeightSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("vertex count n must be >= 1");
  struct Visitor {
    std::uint32_t n;
    std::vector<double> operator()(const UniformModel& u) const {
      return uniform_vector(u, n);
    }
    std::vector<double> operator()(const PowerLawModel& pl) const {
      return power_law_vector(pl, n);
    }
    std::vector<double> operator()(const ExplicitModel& e) const {
      return e.values;
    }
  };
  return AttributeWeights(std::visit(Visitor{spec.n}, spec.model), spec.n);
}

double criticality(std::span<const double> p, std::uint32_t n) noexcept {
  CompensatedSum acc;
  for (double v : p) acc += v * v;
  return static_cast<double>(n) * acc.value();
}

const char* to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::subcritical: return "subcritical";
    case Phase::critical: return "critical";
    case Phase::supercritical: return "supercritical";
  }
  return "unknown";
}

RegimeReport regime(double c, double p_max, std::uint32_t n, double epsilon_c) {
  if (!(epsilon_c > 0.0 && epsilon_c < 0.5)) {
    throw std::invalid_argument("epsilon_c must lie in (0, 0.5)");
  }
  RegimeReport report;
  report.c = c;
  report.p_max = p_max;
  report.n = n;
  if (c < 1.0 - epsilon_c) {
    report.phase = Phase::subcritical;
  } else if (c > 1.0 + epsilon_c) {
    report.phase = Phase::supercritical;
  } else {
    report.phase = Phase::critical;
  }
  if (p_max > 0.0 && p_max < 1.0 && n > 1) {
    report.gamma_witness = -std::log(p_max) / std::log(static_cast<double>(n));
  }
  const bool gamma_ok = report.gamma_witness && *report.gamma_witness > 0.5;
  report.theorem2_hypotheses_met = report.phase == Phase::supercritical && gamma_ok;
  report.hypothesis_marginal = gamma_ok && *report.gamma_witness <= 0.55;
  return report;
}

}  // namespace rig
