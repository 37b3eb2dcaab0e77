#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rig {

enum class TailBoundKind { chernoff_upper, chung_lu_upper, chung_lu_lower };

const char* to_string(TailBoundKind kind) noexcept;

struct TailBound {
  double bound = 1.0;  // in [0, 1]
  TailBoundKind kind = TailBoundKind::chernoff_upper;
  std::vector<std::pair<std::string, double>> parameters;
};

// Upper tail of X ~ Binomial(n, p):
//   P[X >= np + t] <= exp(-t^2 / (2 (np + t/3))).
// Throws std::invalid_argument unless t > 0 and p in [0, 1].
TailBound chernoff_upper(std::uint64_t n, double p, double t);

// Tails of a sum Y of independent terms with M1 <= Y_i <= M2 and
// norm_sq = sum E[Y_i^2]:
//   P[Y >= EY + lambda] <= exp(-lambda^2 / (2 (norm_sq + M2 lambda / 3)))
//   P[Y <= EY - lambda] <= exp(-lambda^2 / (2 (norm_sq - M1 lambda / 3)))
// Vacuous upper bounds clamp to 1. The lower form throws std::domain_error
// when its denominator is not positive.
TailBound chung_lu_upper(double norm_sq, double m2, double lambda);
TailBound chung_lu_lower(double norm_sq, double m1, double lambda);

}  // namespace rig
