#pragma once

// Reference computations used only by tests. Each one takes a route that is
// independent of the library code it checks (BFS instead of union-find,
// direct binomial sums instead of bound formulas, plain bisection on the
// untransformed equation).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "rig/sampler.hpp"

namespace oracle {

inline std::vector<std::uint32_t> bfs_component_sizes(const rig::ProjectedGraph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(g.n, false);
  std::vector<std::uint32_t> sizes;
  for (std::uint32_t s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::queue<std::uint32_t> q;
    q.push(s);
    seen[s] = true;
    std::uint32_t size = 0;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      ++size;
      for (auto v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

// Size of the component containing `start`, by BFS over the projection.
inline std::uint32_t bfs_component_of(const rig::ProjectedGraph& g, std::uint32_t start) {
  std::vector<std::vector<std::uint32_t>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(g.n, false);
  std::vector<std::uint32_t> stack{start};
  seen[start] = true;
  std::uint32_t size = 0;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    ++size;
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return size;
}

// P[X >= threshold] for X ~ Binomial(n, p), summed term by term.
inline double binomial_upper_tail(int n, double p, double threshold) {
  double tail = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (k < threshold) continue;
    const double log_term = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n - k + 1.0) +
                            (k > 0 ? k * std::log(p) : 0.0) +
                            (n - k > 0 ? (n - k) * std::log1p(-p) : 0.0);
    tail += std::exp(log_term);
  }
  return tail;
}

// Plain bisection on f over [lo, hi]; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  const bool lo_positive = f(lo) > 0.0;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0.0) == lo_positive) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Root of exp(c (x - 1)) = x in (0, 1), untransformed.
inline double zeta(double c) {
  return bisect([c](double x) { return std::exp(c * (x - 1.0)) - x; }, 1e-15, 1.0 - 1e-9);
}

// Root of exp(mp (exp(np (x - 1)) - 1)) = x in (0, 1), untransformed.
inline double zeta_star(double np, double mp) {
  return bisect([=](double x) { return std::exp(mp * (std::exp(np * (x - 1.0)) - 1.0)) - x; },
                1e-15, 1.0 - 1e-9);
}

// Direct product form of the extinction map, for small m.
inline double gw_map_direct(const std::vector<double>& p, double n, double x) {
  double g = 1.0;
  for (double q : p) g *= 1.0 - q * (1.0 - std::pow(1.0 - q * (1.0 - x), n));
  return g;
}

// Empirical upper tails of W = sum_j p_j I_j with I_j ~ Bernoulli(p_j),
// the attribute weight one vertex brings. Uses its own generator.
inline std::vector<double> weighted_sum_tails(const std::vector<double>& p,
                                              const std::vector<double>& thresholds,
                                              int samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> hits(thresholds.size(), 0.0);
  for (int s = 0; s < samples; ++s) {
    double w = 0.0;
    for (double q : p) {
      if (u(gen) < q) w += q;
    }
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
      if (w >= thresholds[t]) hits[t] += 1.0;
    }
  }
  for (auto& h : hits) h /= samples;
  return hits;
}

}  // namespace oracle
