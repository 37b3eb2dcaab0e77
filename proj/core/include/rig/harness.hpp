#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rig/branching.hpp"
#include "rig/model.hpp"

namespace rig {

/// A weight family parameterized by c, with m fixed or tied to n.
struct ModelFamily {
  enum class Kind { uniform, powerlaw };

  Kind kind = Kind::uniform;
  double tau = 1.0;  // powerlaw only
  // Exactly one of these determines m.
  std::optional<std::uint64_t> m;
  std::optional<double> m_alpha;  // m = round(n^alpha)
  std::optional<double> m_beta;   // m = round(beta n)

  std::uint64_t attributes_for(std::uint32_t n) const;
  WeightSpec spec(std::uint32_t n, double c) const;
};

/// Weights for one sweep point. c == 0 yields the all-zero vector, which
/// build_weights rejects but is a legitimate (empty graph) point.
AttributeWeights family_weights(const ModelFamily& family, std::uint32_t n, double c);

/// Constants hidden by the O()/Omega() statements; see configs/defaults.json.
struct VerifyThresholds {
  double K = 50.0;
  double kappa = 0.1;
  double delta = 0.02;
};

struct SweepConfig {
  ModelFamily family;
  std::uint32_t n = 0;
  double c_min = 0.0;
  double c_max = 0.0;
  std::size_t steps = 1;
  std::size_t trials_per_point = 1;
  std::uint64_t master_seed = 0;
  double epsilon_c = kDefaultEpsilonC;
  ExtinctionOptions solver;
  VerifyThresholds thresholds;
  /// Wall-clock times make the CSV non-reproducible, so they are off by default.
  bool record_timing = false;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  /// c values, evenly spaced from c_min to c_max.
  std::vector<double> points() const;
};

/// Uniform p = sqrt(c / (m n)) with m = n^alpha, alpha < 1.
SweepConfig example1_preset(std::uint32_t n, double alpha, double c_min, double c_max,
                            std::size_t steps, std::size_t trials, std::uint64_t seed);
/// Uniform p = sqrt(c / (m n)) with m = beta n.
SweepConfig example2_preset(std::uint32_t n, double beta, double c_min, double c_max,
                            std::size_t steps, std::size_t trials, std::uint64_t seed);

struct SweepRecord {
  double c = 0.0;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::size_t point = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::uint32_t L1 = 0;
  std::uint32_t L2 = 0;
  double rho_pred = 1.0;
  double giant_fraction_pred = 0.0;
  std::int64_t wall_time_ms = 0;
  std::string error;  // nonempty when the trial threw

  bool ok() const noexcept { return error.empty(); }
};

/// Seed of trial `trial` at point `point`.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t point, std::size_t trial) noexcept;

/// Runs every (point, trial) pair on a pool of `workers` threads. Output is
/// ordered by (point, trial) and identical for any worker count. Exceptions
/// inside a trial are caught and stored in the record.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, unsigned workers = 1);

/// Regime classification of each sweep point, in point order.
std::vector<RegimeReport> sweep_regimes(const SweepConfig& cfg);

inline constexpr const char* kSweepCsvHeader =
    "c,n,m,trial,seed,L1,L2,rho_pred,giant_frac_pred,wall_ms";

/// Failed trials are written with empty L1 and L2 fields.
void write_csv(std::ostream& out, std::span<const SweepRecord> records);
/// Throws std::runtime_error on a header mismatch or malformed row.
std::vector<SweepRecord> read_csv(std::istream& in);

struct Theorem1Check {
  std::size_t records = 0;
  double max_L1_over_bound = 0.0;
  bool pass = true;
};

struct Theorem2Check {
  std::size_t points = 0;
  std::size_t records = 0;
  std::size_t skipped_hypotheses_unmet = 0;
  double max_mean_abs_error = 0.0;  // max over points of mean |L1/n - (1 - rho)|
  double max_L2_over_bound = 0.0;
  bool pass = true;
};

struct Theorem3Check {
  std::size_t records = 0;
  std::optional<double> min_L1_times_p;
  std::optional<double> min_L1_over_bound;
  bool pass = true;
};

struct VerificationReport {
  VerifyThresholds thresholds;
  std::optional<Theorem1Check> theorem1;
  std::optional<Theorem2Check> theorem2;
  std::optional<Theorem3Check> theorem3;
  std::size_t critical_records = 0;
  std::size_t failed_records = 0;
  std::size_t unmatched_records = 0;

  bool pass() const noexcept;
};

struct TheoremSelection {
  bool theorem1 = true;
  bool theorem2 = true;
  bool theorem3 = true;
};

/// Checks records against the size statements:
///   subcritical:   L1 <= K max(n p ln n, ln n)
///   supercritical: mean |L1/n - (1 - rho)| <= delta per point, L2 <= K max(n p ln n, ln n)
///                  and L1 >= kappa min(1/p, n)
/// with p = p_max. Each record is matched to the hypothesis with the same n
/// and c; supercritical checks only use points whose hypotheses are met.
VerificationReport verify_theorems(std::span<const SweepRecord> records,
                                   std::span<const RegimeReport> hypotheses,
                                   const VerifyThresholds& thresholds = {},
                                   TheoremSelection selection = {});

struct GapPoint {
  double c = 0.0;
  double median_L1 = 0.0;
  std::size_t trials = 0;
};

struct GapSummary {
  std::vector<GapPoint> curve;  // ascending c
  std::optional<GapPoint> below;  // c < 1 nearest to 1 - delta
  std::optional<GapPoint> above;  // c > 1 nearest to 1 + delta
  double ratio = 0.0;             // above.median_L1 / below.median_L1
  bool complete = false;
};

GapSummary giant_gap_scan(std::span<const SweepRecord> records, double delta = 1.0);

double median(std::vector<double> values);

/// Least-squares slope of ln(y) against ln(x).
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace rig
