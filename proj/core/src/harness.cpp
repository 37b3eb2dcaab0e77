#include "rig/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rig/components.hpp"
#include "rig/rng.hpp"
#include "rig/sampler.hpp"

namespace rig {

std::uint64_t ModelFamily::attributes_for(std::uint32_t n) const {
  const int set = static_cast<int>(m.has_value()) + static_cast<int>(m_alpha.has_value()) +
                  static_cast<int>(m_beta.has_value());
  if (set != 1) throw std::invalid_argument("exactly one of m, m_alpha, m_beta must be set");
  std::uint64_t count = 0;
  if (m) {
    count = *m;
  } else if (m_alpha) {
    count = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), *m_alpha)));
  } else {
    count = static_cast<std::uint64_t>(std::llround(*m_beta * static_cast<double>(n)));
  }
  if (count == 0) throw std::invalid_argument("model family yields m = 0");
  return count;
}

WeightSpec ModelFamily::spec(std::uint32_t n, double c) const {
  const auto count = static_cast<std::size_t>(attributes_for(n));
  if (kind == Kind::uniform) return {n, UniformModel{c, count}};
  return {n, PowerLawModel{tau, c, count}};
}

AttributeWeights family_weights(const ModelFamily& family, std::uint32_t n, double c) {
  if (c == 0.0) {
    return AttributeWeights(std::vector<double>(family.attributes_for(n), 0.0), n);
  }
  return build_weights(family.spec(n, c));
}

void SweepConfig::validate() const {
  if (n == 0) throw std::invalid_argument("sweep n must be >= 1");
  if (!(c_min >= 0.0)) throw std::invalid_argument("c_min must be >= 0");
  if (steps == 0) throw std::invalid_argument("steps must be >= 1");
  if (c_min > c_max || (c_min == c_max && steps != 1)) {
    throw std::invalid_argument("need c_min < c_max (or c_min == c_max with steps == 1)");
  }
  if (c_min < c_max && steps < 2) {
    throw std::invalid_argument("a c range needs steps >= 2");
  }
  if (trials_per_point == 0) throw std::invalid_argument("trials_per_point must be >= 1");
  if (!(epsilon_c > 0.0 && epsilon_c < 0.5)) {
    throw std::invalid_argument("epsilon_c must lie in (0, 0.5)");
  }
  family.attributes_for(n);
}

std::vector<double> SweepConfig::points() const {
  std::vector<double> cs(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    cs[k] = steps == 1 ? c_min
                       : c_min + (c_max - c_min) * static_cast<double>(k) /
                                     static_cast<double>(steps - 1);
  }
  return cs;
}

namespace {

SweepConfig uniform_preset(std::uint32_t n, double c_min, double c_max, std::size_t steps,
                           std::size_t trials, std::uint64_t seed) {
  SweepConfig cfg;
  cfg.family.kind = ModelFamily::Kind::uniform;
  cfg.n = n;
  cfg.c_min = c_min;
  cfg.c_max = c_max;
  cfg.steps = steps;
  cfg.trials_per_point = trials;
  cfg.master_seed = seed;
  return cfg;
}

}  // namespace

SweepConfig example1_preset(std::uint32_t n, double alpha, double c_min, double c_max,
                            std::size_t steps, std::size_t trials, std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("example 1 needs alpha in (0, 1)");
  auto cfg = uniform_preset(n, c_min, c_max, steps, trials, seed);
  cfg.family.m_alpha = alpha;
  return cfg;
}

SweepConfig example2_preset(std::uint32_t n, double beta, double c_min, double c_max,
                            std::size_t steps, std::size_t trials, std::uint64_t seed) {
  if (!(beta > 0.0)) throw std::invalid_argument("example 2 needs beta > 0");
  auto cfg = uniform_preset(n, c_min, c_max, steps, trials, seed);
  cfg.family.m_beta = beta;
  return cfg;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t point,
                         std::size_t trial) noexcept {
  return derive_seed(master_seed, point, trial);
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, unsigned workers) {
  cfg.validate();
  const auto cs = cfg.points();
  const std::uint64_t m = cfg.family.attributes_for(cfg.n);

  struct Point {
    std::optional<AttributeWeights> weights;
    double rho = 1.0;
    std::string error;
  };
  std::vector<Point> points(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    try {
      points[k].weights = family_weights(cfg.family, cfg.n, cs[k]);
      ExtinctionOptions solver = cfg.solver;
      solver.epsilon_c = cfg.epsilon_c;
      points[k].rho = extinction_probability(*points[k].weights, solver).rho;
    } catch (const std::exception& e) {
      points[k].error = e.what();
    }
  }

  const std::size_t total = cs.size() * cfg.trials_per_point;
  std::vector<SweepRecord> records(total);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      const std::size_t k = task / cfg.trials_per_point;
      const std::size_t trial = task % cfg.trials_per_point;
      SweepRecord& rec = records[task];
      rec.c = cs[k];
      rec.n = cfg.n;
      rec.m = m;
      rec.point = k;
      rec.trial = trial;
      rec.seed = trial_seed(cfg.master_seed, k, trial);
      rec.rho_pred = points[k].rho;
      rec.giant_fraction_pred = 1.0 - points[k].rho;
      if (!points[k].error.empty()) {
        rec.error = points[k].error;
        continue;
      }
      try {
        const auto started = std::chrono::steady_clock::now();
        const auto sample = sample_bipartite(*points[k].weights, rec.seed);
        const auto summary = component_sizes(sample);
        rec.L1 = summary.largest;
        rec.L2 = summary.second_largest;
        if (cfg.record_timing) {
          rec.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        }
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(total, 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return records;
}

std::vector<RegimeReport> sweep_regimes(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<RegimeReport> out;
  for (double c : cfg.points()) {
    const auto w = family_weights(cfg.family, cfg.n, c);
    out.push_back(regime(w, cfg.epsilon_c));
  }
  return out;
}

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_unsigned(const std::string& s, const char* column) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad value in column ") + column + ": '" + s + "'");
  }
  if (used != s.size()) {
    throw std::runtime_error(std::string("bad value in column ") + column + ": '" + s + "'");
  }
  return static_cast<T>(v);
}

double parse_double(const std::string& s, const char* column) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad value in column ") + column + ": '" + s + "'");
  }
  if (used != s.size()) {
    throw std::runtime_error(std::string("bad value in column ") + column + ": '" + s + "'");
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    out << format_double(r.c) << ',' << r.n << ',' << r.m << ',' << r.trial << ',' << r.seed
        << ',';
    if (r.ok()) out << r.L1 << ',' << r.L2;
    else out << ',';
    out << ',' << format_double(r.rho_pred) << ',' << format_double(r.giant_fraction_pred)
        << ',' << r.wall_time_ms << '\n';
  }
}

std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw std::runtime_error("unexpected sweep CSV header; expected '" +
                             std::string(kSweepCsvHeader) + "'");
  }
  std::vector<SweepRecord> records;
  std::map<double, std::size_t> point_index;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 10) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 10 fields");
    }
    SweepRecord r;
    r.c = parse_double(f[0], "c");
    r.n = parse_unsigned<std::uint32_t>(f[1], "n");
    r.m = parse_unsigned<std::uint64_t>(f[2], "m");
    r.trial = parse_unsigned<std::size_t>(f[3], "trial");
    r.seed = parse_unsigned<std::uint64_t>(f[4], "seed");
    if (f[5].empty() && f[6].empty()) {
      r.error = "trial failed";
    } else {
      r.L1 = parse_unsigned<std::uint32_t>(f[5], "L1");
      r.L2 = parse_unsigned<std::uint32_t>(f[6], "L2");
    }
    r.rho_pred = parse_double(f[7], "rho_pred");
    r.giant_fraction_pred = parse_double(f[8], "giant_frac_pred");
    r.wall_time_ms = static_cast<std::int64_t>(parse_double(f[9], "wall_ms"));
    r.point = point_index.try_emplace(r.c, point_index.size()).first->second;
    records.push_back(std::move(r));
  }
  return records;
}

bool VerificationReport::pass() const noexcept {
  if (failed_records > 0 || unmatched_records > 0) return false;
  if (theorem1 && !theorem1->pass) return false;
  if (theorem2 && !theorem2->pass) return false;
  if (theorem3 && !theorem3->pass) return false;
  return true;
}

namespace {

const RegimeReport* match_hypothesis(const SweepRecord& r,
                                     std::span<const RegimeReport> hypotheses) {
  for (const auto& h : hypotheses) {
    if (h.n != r.n) continue;
    const double scale = std::max(std::abs(h.c), std::abs(r.c));
    if (std::abs(h.c - r.c) <= 1e-12 * scale || h.c == r.c) return &h;
  }
  return nullptr;
}

double size_bound(double K, std::uint32_t n, double p_max) {
  const double nd = static_cast<double>(n);
  const double log_n = std::log(nd);
  return K * std::max(nd * p_max * log_n, log_n);
}

}  // namespace

VerificationReport verify_theorems(std::span<const SweepRecord> records,
                                   std::span<const RegimeReport> hypotheses,
                                   const VerifyThresholds& thresholds,
                                   TheoremSelection selection) {
  VerificationReport report;
  report.thresholds = thresholds;
  if (selection.theorem1) report.theorem1.emplace();
  if (selection.theorem2) report.theorem2.emplace();
  if (selection.theorem3) report.theorem3.emplace();

  // Supercritical records grouped by hypothesis, for the per-point mean.
  std::map<const RegimeReport*, std::vector<const SweepRecord*>> supercritical;

  for (const auto& r : records) {
    if (!r.ok()) {
      ++report.failed_records;
      continue;
    }
    const RegimeReport* h = match_hypothesis(r, hypotheses);
    if (h == nullptr) {
      ++report.unmatched_records;
      continue;
    }
    switch (h->phase) {
      case Phase::critical:
        ++report.critical_records;
        break;
      case Phase::subcritical:
        if (report.theorem1) {
          auto& t1 = *report.theorem1;
          ++t1.records;
          const double ratio = r.L1 / size_bound(thresholds.K, r.n, h->p_max);
          t1.max_L1_over_bound = std::max(t1.max_L1_over_bound, ratio);
        }
        break;
      case Phase::supercritical:
        supercritical[h].push_back(&r);
        break;
    }
  }
  if (report.theorem1) {
    report.theorem1->pass = report.theorem1->max_L1_over_bound <= 1.0;
  }

  for (const auto& [h, recs] : supercritical) {
    if (!h->theorem2_hypotheses_met) {
      if (report.theorem2) report.theorem2->skipped_hypotheses_unmet += recs.size();
      continue;
    }
    if (report.theorem2) {
      auto& t2 = *report.theorem2;
      ++t2.points;
      double err = 0.0;
      for (const auto* r : recs) {
        ++t2.records;
        err += std::abs(static_cast<double>(r->L1) / r->n - r->giant_fraction_pred);
        t2.max_L2_over_bound =
            std::max(t2.max_L2_over_bound, r->L2 / size_bound(thresholds.K, r->n, h->p_max));
      }
      t2.max_mean_abs_error = std::max(t2.max_mean_abs_error, err / recs.size());
    }
    if (report.theorem3) {
      auto& t3 = *report.theorem3;
      const double floor_size = std::min(1.0 / h->p_max, static_cast<double>(h->n));
      for (const auto* r : recs) {
        ++t3.records;
        const double lp = r->L1 * h->p_max;
        const double ratio = r->L1 / floor_size;
        t3.min_L1_times_p = t3.min_L1_times_p ? std::min(*t3.min_L1_times_p, lp) : lp;
        t3.min_L1_over_bound =
            t3.min_L1_over_bound ? std::min(*t3.min_L1_over_bound, ratio) : ratio;
      }
    }
  }
  if (report.theorem2) {
    auto& t2 = *report.theorem2;
    t2.pass = t2.max_mean_abs_error <= thresholds.delta && t2.max_L2_over_bound <= 1.0;
  }
  if (report.theorem3) {
    auto& t3 = *report.theorem3;
    t3.pass = !t3.min_L1_over_bound || *t3.min_L1_over_bound >= thresholds.kappa;
  }
  return report;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double upper = values[mid];
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

GapSummary giant_gap_scan(std::span<const SweepRecord> records, double delta) {
  std::map<double, std::vector<double>> by_c;
  for (const auto& r : records) {
    if (r.ok()) by_c[r.c].push_back(r.L1);
  }
  GapSummary summary;
  for (auto& [c, l1] : by_c) summary.curve.push_back({c, median(l1), l1.size()});

  for (const auto& point : summary.curve) {
    if (point.c < 1.0) {
      if (!summary.below ||
          std::abs(point.c - (1.0 - delta)) < std::abs(summary.below->c - (1.0 - delta))) {
        summary.below = point;
      }
    } else if (point.c > 1.0) {
      if (!summary.above ||
          std::abs(point.c - (1.0 + delta)) < std::abs(summary.above->c - (1.0 + delta))) {
        summary.above = point;
      }
    }
  }
  summary.complete = summary.below.has_value() && summary.above.has_value();
  if (summary.complete) summary.ratio = summary.above->median_L1 / summary.below->median_L1;
  return summary;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs two or more paired points");
  }
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("slope fit needs distinct x values");
  return (k * sxy - sx * sy) / denom;
}

}  // namespace rig
