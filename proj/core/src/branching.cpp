#include "rig/branching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rig/numeric.hpp"
#include "rig/rng.hpp"

namespace rig {

double gw_map(const AttributeWeights& w, double x) {
  const double miss = 1.0 - x;
  const double n = static_cast<double>(w.n());
  CompensatedSum log_g;
  for (const auto& [q, count] : w.groups()) {
    const double inner = -std::expm1(n * std::log1p(-q * miss));
    const double term = std::log1p(-q * inner);
    // q = 1 with x = 0 makes a factor exactly 0; -inf would poison the sum.
    if (std::isinf(term)) return 0.0;
    log_g += static_cast<double>(count) * term;
  }
  return std::exp(log_g.value());
}

ExtinctionSolution extinction_probability(const AttributeWeights& w,
                                          const ExtinctionOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.max_iter == 0) throw std::invalid_argument("max_iter must be >= 1");

  ExtinctionSolution solution;
  if (w.c() <= 1.0 + options.epsilon_c) {
    solution.critical_band = w.c() > 1.0;
    return solution;
  }

  double x = 0.0;
  solution.converged = false;
  for (std::size_t k = 1; k <= options.max_iter; ++k) {
    double next = gw_map(w, x);
    // Rounding may jitter the last ulp once the iteration has settled.
    if (next < x - 4.0 * std::numeric_limits<double>::epsilon()) {
      throw std::logic_error("fixed-point iteration decreased; gw_map is not monotone here");
    }
    next = std::clamp(next, x, 1.0);
    const double step = next - x;
    x = next;
    solution.iterations = k;
    if (step <= options.tol) {
      solution.converged = true;
      break;
    }
  }
  solution.rho = x;
  solution.residual = std::abs(gw_map(w, x) - x);
  return solution;
}

namespace {

// Bisection for a function positive near 0 and negative just below 1. The
// left end is 0 rather than a small positive number so that roots below
// 1e-15 (c > ~35) stay bracketed; both residuals are +inf there.
template <typename F>
double bisect_unit(F&& h) {
  double lo = 0.0;
  double hi = 1.0 - 1e-15;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double solve_zeta(double c) {
  if (!(c > 1.0)) throw std::domain_error("zeta requires c > 1");
  // Same sign as exp(c (x - 1)) - x, but accurate near x = 1.
  return bisect_unit([c](double x) { return c * (x - 1.0) - std::log(x); });
}

double solve_zeta_star(double np, double mp) {
  if (!(np * mp > 1.0)) throw std::domain_error("zeta* requires np * mp > 1");
  return bisect_unit(
      [np, mp](double x) { return mp * std::expm1(np * (x - 1.0)) - std::log(x); });
}

const char* to_string(UniformRegime regime) noexcept {
  switch (regime) {
    case UniformRegime::small_m: return "small_m";
    case UniformRegime::large_m: return "large_m";
    case UniformRegime::linear: return "linear";
  }
  return "unknown";
}

double uniform_extinction(UniformRegime regime, std::uint64_t n, std::uint64_t m, double c) {
  if (!(c > 1.0)) throw std::domain_error("uniform extinction formulas require c > 1");
  if (n == 0 || m == 0) throw std::invalid_argument("n and m must be positive");
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double p = std::sqrt(c / (md * nd));
  switch (regime) {
    case UniformRegime::small_m: {
      const double mp = md * p;
      if (mp >= 1.0) {
        throw std::domain_error("small-m closed form needs m p < 1");
      }
      return 1.0 - (1.0 - solve_zeta(c)) * mp;
    }
    case UniformRegime::large_m:
      return solve_zeta(c);
    case UniformRegime::linear:
      return solve_zeta_star(nd * p, md * p);
  }
  throw std::invalid_argument("unknown uniform regime");
}

GwOutcome simulate_gw(const AttributeWeights& w, std::uint64_t seed,
                      std::uint64_t population_cap, std::uint64_t generation_cap) {
  if (population_cap == 0 || generation_cap == 0) {
    throw std::invalid_argument("population and generation caps must be >= 1");
  }
  Xoshiro256 rng(seed);
  GwOutcome outcome;
  outcome.total_type0_progeny = 1;
  std::uint64_t vertices = 1;
  const std::uint64_t n = w.n();

  while (true) {
    if (vertices == 0) {
      outcome.status = GwStatus::extinct;
      return outcome;
    }
    if (vertices >= population_cap || outcome.generations >= generation_cap) {
      outcome.status = GwStatus::survived_to_cap;
      return outcome;
    }
    std::uint64_t next = 0;
    for (const auto& [q, count] : w.groups()) {
      const auto trials = static_cast<__uint128_t>(vertices) * count;
      if (trials > static_cast<__uint128_t>(INT64_MAX)) {
        throw std::overflow_error("attribute offspring count overflows 64 bits");
      }
      const std::uint64_t attributes = binomial(rng, static_cast<std::uint64_t>(trials), q);
      const auto draws = static_cast<__uint128_t>(attributes) * n;
      if (draws > static_cast<__uint128_t>(INT64_MAX)) {
        throw std::overflow_error("vertex offspring count overflows 64 bits");
      }
      next += binomial(rng, static_cast<std::uint64_t>(draws), q);
    }
    ++outcome.generations;
    outcome.total_type0_progeny += next;
    vertices = next;
  }
}

GwEstimate estimate_extinction(const AttributeWeights& w, std::uint64_t runs,
                               std::uint64_t seed, std::uint64_t population_cap,
                               std::uint64_t generation_cap, unsigned workers) {
  const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::uint64_t>(runs, 1));
  std::vector<std::uint64_t> extinct(threads, 0);
  auto work = [&](std::size_t t) {
    for (std::uint64_t r = t; r < runs; r += threads) {
      const auto outcome = simulate_gw(w, derive_seed(seed, r), population_cap, generation_cap);
      if (outcome.status == GwStatus::extinct) ++extinct[t];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  GwEstimate estimate;
  estimate.runs = runs;
  for (auto e : extinct) estimate.extinct += e;
  if (runs > 0) {
    const double f = static_cast<double>(estimate.extinct) / static_cast<double>(runs);
    estimate.frequency = f;
    estimate.standard_error = std::sqrt(f * (1.0 - f) / static_cast<double>(runs));
  }
  return estimate;
}

bool domination_hypotheses_hold(const AttributeWeights& p, const AttributeWeights& q) {
  if (p.n() != q.n()) throw std::invalid_argument("weight vectors must share n");

  const double scale = std::max(std::abs(p.c()), std::abs(q.c()));
  if (std::abs(p.c() - q.c()) > 1e-10 * std::max(scale, 1e-300)) return false;

  // For each distinct value v: a_v entries in p, b_v in q. A valid (S, pi)
  // exists iff some threshold value splits them so that a_v <= b_v below it
  // (all of p matched there) and b_v <= a_v above it (all of q matched).
  std::map<double, std::pair<std::size_t, std::size_t>> counts;
  for (double v : p.p()) ++counts[v].first;
  for (double v : q.p()) ++counts[v].second;
  std::vector<std::pair<std::size_t, std::size_t>> ab;
  ab.reserve(counts.size());
  for (const auto& [v, c] : counts) ab.push_back(c);

  const std::size_t d = ab.size();
  std::vector<bool> suffix_ok(d + 1, true);
  for (std::size_t k = d; k-- > 0;) {
    suffix_ok[k] = suffix_ok[k + 1] && ab[k].second <= ab[k].first;
  }
  bool prefix_ok = true;
  for (std::size_t k = 0; k < d; ++k) {
    if (prefix_ok && suffix_ok[k + 1]) return true;
    prefix_ok = prefix_ok && ab[k].first <= ab[k].second;
    if (!prefix_ok) break;
  }
  return false;
}

ExtinctionComparison compare_extinction(const AttributeWeights& p, const AttributeWeights& q,
                                        const ExtinctionOptions& options, double ordering_tol) {
  ExtinctionComparison result;
  result.hypotheses_hold = domination_hypotheses_hold(p, q);
  result.rho_p = extinction_probability(p, options).rho;
  result.rho_q = extinction_probability(q, options).rho;
  result.ordering_respected = result.rho_p >= result.rho_q - ordering_tol;
  return result;
}

}  // namespace rig
