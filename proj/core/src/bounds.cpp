#include "rig/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rig {

namespace {

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

}  // namespace

const char* to_string(TailBoundKind kind) noexcept {
  switch (kind) {
    case TailBoundKind::chernoff_upper: return "chernoff_upper";
    case TailBoundKind::chung_lu_upper: return "chung_lu_upper";
    case TailBoundKind::chung_lu_lower: return "chung_lu_lower";
  }
  return "unknown";
}

TailBound chernoff_upper(std::uint64_t n, double p, double t) {
  require_positive(t, "t");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const double mean = static_cast<double>(n) * p;
  return {clamp_unit(std::exp(-t * t / (2.0 * (mean + t / 3.0)))),
          TailBoundKind::chernoff_upper,
          {{"n", static_cast<double>(n)}, {"p", p}, {"t", t}}};
}

TailBound chung_lu_upper(double norm_sq, double m2, double lambda) {
  require_positive(lambda, "lambda");
  if (!(norm_sq >= 0.0)) throw std::invalid_argument("norm_sq must be nonnegative");
  const double denom = 2.0 * (norm_sq + m2 * lambda / 3.0);
  // A nonpositive denominator can only come from M2 < 0 with tiny norm_sq;
  // the bound carries no information then.
  const double bound = denom > 0.0 ? std::exp(-lambda * lambda / denom) : 1.0;
  return {clamp_unit(bound), TailBoundKind::chung_lu_upper,
          {{"norm_sq", norm_sq}, {"M2", m2}, {"lambda", lambda}}};
}

TailBound chung_lu_lower(double norm_sq, double m1, double lambda) {
  require_positive(lambda, "lambda");
  if (!(norm_sq >= 0.0)) throw std::invalid_argument("norm_sq must be nonnegative");
  const double denom = 2.0 * (norm_sq - m1 * lambda / 3.0);
  if (!(denom > 0.0)) {
    throw std::domain_error("lower-tail bound is undefined: 2 (norm_sq - M1 lambda / 3) <= 0");
  }
  return {clamp_unit(std::exp(-lambda * lambda / denom)), TailBoundKind::chung_lu_lower,
          {{"norm_sq", norm_sq}, {"M1", m1}, {"lambda", lambda}}};
}

}  // namespace rig
