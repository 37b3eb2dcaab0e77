#include "doctest.h"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rig/rng.hpp"
#include "rig/sampler.hpp"

using namespace rig;

TEST_CASE("degenerate probabilities") {
  const auto empty = sample_bipartite(build_weights({7, ExplicitModel{{0.0}}}), 99);
  REQUIRE(empty.m() == 1);
  CHECK(empty.members(0).empty());

  const auto full = sample_bipartite(build_weights({3, ExplicitModel{{1.0}}}), 99);
  CHECK(full.to_lists() == std::vector<std::vector<VertexId>>{{0, 1, 2}});
}

TEST_CASE("member lists are strictly increasing and in range") {
  const auto w = build_weights({500, PowerLawModel{0.8, 3.0, 200}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = sample_bipartite(w, seed);
    REQUIRE(b.m() == w.m());
    CHECK(b.seed() == seed);
    for (std::size_t i = 0; i < b.m(); ++i) {
      const auto list = b.members(i);
      for (std::size_t j = 0; j < list.size(); ++j) {
        REQUIRE(list[j] < 500u);
        if (j > 0) REQUIRE(list[j - 1] < list[j]);
      }
    }
  }
}

TEST_CASE("mean attribute size matches Binomial(3, 0.5)") {
  const auto w = build_weights({3, ExplicitModel{{0.5, 0.5}}});
  double total = 0.0;
  const int seeds = 100000;
  for (int s = 0; s < seeds; ++s) total += sample_bipartite(w, s).members(0).size();
  CHECK(std::abs(total / seeds - 1.5) <= 0.02);
}

TEST_CASE("membership law equals independent Bernoulli draws (chi-square)") {
  // n = 3, one attribute: 8 possible member sets with probability
  // p^k (1-p)^(3-k). 99.9% quantile of chi-square with 7 dof is 24.32.
  for (double p : {0.2, 0.5, 0.85}) {
    const auto w = build_weights({3, ExplicitModel{{p}}});
    std::map<unsigned, int> counts;
    const int samples = 100000;
    for (int s = 0; s < samples; ++s) {
      unsigned mask = 0;
      const auto b = sample_bipartite(w, 1000003ull * s + 17);
      for (VertexId v : b.members(0)) mask |= 1u << v;
      ++counts[mask];
    }
    double chi2 = 0.0;
    for (unsigned mask = 0; mask < 8; ++mask) {
      const int k = __builtin_popcount(mask);
      const double expected = samples * std::pow(p, k) * std::pow(1 - p, 3 - k);
      const double diff = counts[mask] - expected;
      chi2 += diff * diff / expected;
    }
    INFO("p = " << p << ", chi2 = " << chi2);
    CHECK(chi2 < 24.32);
  }
}

TEST_CASE("expected bipartite edge count is n * sum p") {
  const auto w = build_weights({200, PowerLawModel{0.7, 1.5, 60}});
  const double expected = 200.0 * std::accumulate(w.p().begin(), w.p().end(), 0.0);
  double variance = 0.0;
  for (double p : w.p()) variance += 200.0 * p * (1 - p);
  const int trials = 10000;
  double total = 0.0;
  for (int t = 0; t < trials; ++t) total += sample_bipartite(w, t).edge_count();
  const double se = std::sqrt(variance / trials);
  CHECK(std::abs(total / trials - expected) <= 3 * se);
}

TEST_CASE("determinism across runs and worker counts") {
  const auto w = build_weights({20000, UniformModel{2.0, 20000}});
  const auto a = sample_bipartite(w, 42);
  const auto b = sample_bipartite(w, 42);
  CHECK(a == b);
  for (unsigned workers : {2u, 3u, 8u}) {
    CHECK(sample_bipartite(w, 42, {workers}) == a);
  }
  CHECK_FALSE(sample_bipartite(w, 43) == a);
}

TEST_CASE("projection") {
  SUBCASE("single clique") {
    const auto g = project(BipartiteSample::from_lists(3, 0, {{0, 1, 2}}));
    CHECK(g.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(to_edge_list(g) == "0 1\n0 2\n1 2\n");
  }
  SUBCASE("overlapping cliques") {
    const auto g = project(BipartiteSample::from_lists(3, 0, {{0, 1}, {1, 2}}));
    CHECK(g.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
  }
  SUBCASE("shared pair is deduplicated") {
    const auto g = project(BipartiteSample::from_lists(4, 0, {{0, 1, 3}, {1, 3}}));
    CHECK(g.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 3}, {1, 3}});
  }
  SUBCASE("empty") {
    const auto g = project(BipartiteSample::from_lists(5, 0, {{}, {}, {}}));
    CHECK(g.edges.empty());
    CHECK(to_edge_list(g).empty());
  }
}

TEST_CASE("BipartiteSample rejects malformed member lists") {
  CHECK_THROWS_AS(BipartiteSample::from_lists(3, 0, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteSample::from_lists(3, 0, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteSample::from_lists(3, 0, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("Floyd subsets are uniform") {
  // Every 2-subset of [0,5) has probability 1/10; every 4-subset 1/5 (the
  // complement path). Check counts against 4 standard errors.
  for (std::uint32_t k : {2u, 4u}) {
    std::map<std::vector<std::uint32_t>, int> counts;
    Xoshiro256 rng(5);
    std::vector<std::uint32_t> out;
    const int draws = 200000;
    for (int i = 0; i < draws; ++i) {
      sample_subset(rng, 5, k, out);
      REQUIRE(out.size() == k);
      REQUIRE(std::is_sorted(out.begin(), out.end()));
      ++counts[out];
    }
    const double expected_p = k == 2 ? 0.1 : 0.2;
    CHECK(counts.size() == (k == 2 ? 10u : 5u));
    for (const auto& [subset, count] : counts) {
      const double se = std::sqrt(expected_p * (1 - expected_p) / draws);
      CHECK(std::abs(double(count) / draws - expected_p) <= 4 * se);
    }
  }
}

TEST_CASE("large subsets use the hash-set path") {
  Xoshiro256 rng(9);
  std::vector<std::uint32_t> out;
  sample_subset(rng, 100000, 5000, out);
  CHECK(out.size() == 5000);
  CHECK(std::adjacent_find(out.begin(), out.end(), std::greater_equal<>()) == out.end());
  CHECK(out.back() < 100000u);
}

TEST_CASE("bounded integers stay in range") {
  Xoshiro256 rng(1);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 1000ull, (1ull << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) REQUIRE(rng.below(bound) < bound);
  }
}
