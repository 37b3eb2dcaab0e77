#include "rig/rng.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace rig {

std::uint64_t Xoshiro256::below(std::uint64_t bound) noexcept {
  if (bound <= 1) return 0;
  __uint128_t product = static_cast<__uint128_t>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<__uint128_t>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::uint64_t binomial(Xoshiro256& rng, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<std::int64_t> dist(static_cast<std::int64_t>(trials), p);
  return static_cast<std::uint64_t>(dist(rng));
}

namespace {

constexpr std::uint32_t kLinearProbeLimit = 48;

// Floyd's algorithm; the result is unordered.
void floyd(Xoshiro256& rng, std::uint32_t n, std::uint32_t k,
           std::vector<std::uint32_t>& out) {
  out.clear();
  out.reserve(k);
  if (k <= kLinearProbeLimit) {
    for (std::uint32_t j = n - k; j < n; ++j) {
      const auto t = static_cast<std::uint32_t>(rng.below(std::uint64_t{j} + 1));
      const bool seen = std::find(out.begin(), out.end(), t) != out.end();
      out.push_back(seen ? j : t);
    }
    return;
  }
  std::unordered_set<std::uint32_t> chosen;
  chosen.reserve(k);
  for (std::uint32_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::uint32_t>(rng.below(std::uint64_t{j} + 1));
    const std::uint32_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    out.push_back(pick);
  }
}

}  // namespace

void sample_subset(Xoshiro256& rng, std::uint32_t n, std::uint32_t k,
                   std::vector<std::uint32_t>& out) {
  if (k >= n) {
    out.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) out[v] = v;
    return;
  }
  if (k > n / 2) {
    std::vector<std::uint32_t> excluded;
    floyd(rng, n, n - k, excluded);
    std::sort(excluded.begin(), excluded.end());
    out.clear();
    out.reserve(k);
    auto skip = excluded.begin();
    for (std::uint32_t v = 0; v < n; ++v) {
      if (skip != excluded.end() && *skip == v) {
        ++skip;
      } else {
        out.push_back(v);
      }
    }
    return;
  }
  floyd(rng, n, k, out);
  std::sort(out.begin(), out.end());
}

}  // namespace rig
