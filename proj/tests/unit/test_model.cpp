#include "doctest.h"

#include <cmath>
#include <random>

#include "rig/error.hpp"
#include "rig/model.hpp"
#include "rig/numeric.hpp"

using namespace rig;

TEST_CASE("uniform weights") {
  const auto w = build_weights({4, UniformModel{1.0, 4}});
  REQUIRE(w.m() == 4);
  for (double p : w.p()) CHECK(p == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(w.c() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w.p_max() == doctest::Approx(0.25));
}

TEST_CASE("explicit weights are copied verbatim") {
  const auto w = build_weights({3, ExplicitModel{{0.5, 0.5}}});
  CHECK(w.p(0) == 0.5);
  CHECK(w.p(1) == 0.5);
  CHECK(w.c() == 1.5);
  CHECK(criticality(w) == 1.5);
}

TEST_CASE("power-law normalization") {
  // 8 s^2 (1 + 1/4) = 2  =>  s = sqrt(0.2), solved by hand.
  const auto w = build_weights({8, PowerLawModel{1.0, 2.0, 2}});
  CHECK(w.p(0) == doctest::Approx(0.4472135954999579).epsilon(1e-12));
  CHECK(w.p(1) == doctest::Approx(0.22360679774997896).epsilon(1e-12));
  CHECK(w.c() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("criticality examples") {
  CHECK(criticality(std::vector<double>{0, 0, 0}, 100) == 0.0);
  CHECK(criticality(std::vector<double>{0.5, 0.5}, 3) == 1.5);
  const auto w = build_weights({1000, UniformModel{2.0, 1000}});
  CHECK(std::abs(w.c() - 2.0) <= 2.0 * 1e-12);
}

TEST_CASE("construction errors") {
  SUBCASE("c <= 0") {
    CHECK_THROWS_AS(build_weights({10, UniformModel{0.0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(build_weights({10, PowerLawModel{1.0, -1.0, 5}}), std::invalid_argument);
  }
  SUBCASE("uniform entry above one") {
    // sqrt(c / (m n)) = sqrt(4) = 2.
    try {
      build_weights({1, UniformModel{4.0, 1}});
      FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
      CHECK(e.index() == 0);
    }
  }
  SUBCASE("power-law head above one names index 0") {
    try {
      build_weights({2, PowerLawModel{2.0, 10.0, 3}});
      FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
      CHECK(e.index() == 0);
    }
  }
  SUBCASE("explicit entry outside [0,1]") {
    CHECK_THROWS_AS(build_weights({3, ExplicitModel{{0.2, 1.5}}}), std::invalid_argument);
    CHECK_THROWS_AS(build_weights({3, ExplicitModel{{-0.1}}}), std::invalid_argument);
    CHECK_THROWS_AS(build_weights({3, ExplicitModel{{std::nan("")}}}), std::invalid_argument);
  }
  SUBCASE("empty or n = 0") {
    CHECK_THROWS_AS(build_weights({3, ExplicitModel{{}}}), std::invalid_argument);
    CHECK_THROWS_AS(build_weights({0, ExplicitModel{{0.1}}}), std::invalid_argument);
    CHECK_THROWS_AS(build_weights({3, UniformModel{1.0, 0}}), std::invalid_argument);
  }
}

TEST_CASE("regime classification") {
  CHECK(regime(0.5, 0.1, 100, 0.01).phase == Phase::subcritical);
  CHECK(regime(1.005, 0.1, 100, 0.01).phase == Phase::critical);
  CHECK(regime(0.995, 0.1, 100, 0.01).phase == Phase::critical);
  CHECK(regime(1.02, 0.1, 100, 0.01).phase == Phase::supercritical);
  CHECK_THROWS_AS(regime(1.0, 0.1, 100, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(regime(1.0, 0.1, 100, 0.5), std::invalid_argument);

  SUBCASE("uniform c = 2, m = n = 1e4") {
    const auto r = regime(build_weights({10000, UniformModel{2.0, 10000}}));
    CHECK(r.p_max == doctest::Approx(std::sqrt(2.0) * 1e-4));
    REQUIRE(r.gamma_witness);
    // -ln(sqrt(2) 1e-4) / ln(1e4), evaluated separately.
    CHECK(*r.gamma_witness == doctest::Approx(0.9623712505420022).epsilon(1e-12));
    CHECK(r.phase == Phase::supercritical);
    CHECK(r.theorem2_hypotheses_met);
    CHECK_FALSE(r.hypothesis_marginal);
  }
  SUBCASE("one heavy attribute") {
    const auto r = regime(build_weights({100, ExplicitModel{{0.9, 0.05}}}));
    CHECK(r.c > 1.0);
    REQUIRE(r.gamma_witness);
    CHECK(*r.gamma_witness == doctest::Approx(0.022878745280337558).epsilon(1e-12));
    CHECK_FALSE(r.theorem2_hypotheses_met);
  }
  SUBCASE("zero vector") {
    const auto r = regime(build_weights({100, ExplicitModel{{0.0, 0.0}}}));
    CHECK_FALSE(r.gamma_witness);
    CHECK(r.phase == Phase::subcritical);
    CHECK_FALSE(r.theorem2_hypotheses_met);
  }
  SUBCASE("marginal gamma") {
    // p_max = n^-0.52 with n = 1e6.
    const auto r = regime(2.0, std::pow(1e6, -0.52), 1000000, 0.01);
    CHECK(r.theorem2_hypotheses_met);
    CHECK(r.hypothesis_marginal);
  }
}

TEST_CASE("property: uniform criticality inverts the construction") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> cdist(0.01, 5.0);
  std::uniform_int_distribution<std::uint32_t> mdist(1, 5000), ndist(1, 100000);
  for (int trial = 0; trial < 300; ++trial) {
    const double c = cdist(gen);
    const std::uint32_t m = mdist(gen), n = ndist(gen);
    if (c / (double(m) * n) > 1.0) continue;
    const auto w = build_weights({n, UniformModel{c, m}});
    CHECK(std::abs(w.c() - c) <= 1e-12 * c);
  }
}

TEST_CASE("property: power law is strictly decreasing and hits c") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> taudist(0.1, 3.0), cdist(0.1, 4.0);
  std::uniform_int_distribution<std::size_t> mdist(2, 3000);
  for (int trial = 0; trial < 200; ++trial) {
    const double tau = taudist(gen), c = cdist(gen);
    const auto m = mdist(gen);
    const WeightSpec spec{100000, PowerLawModel{tau, c, m}};
    const auto w = build_weights(spec);
    for (std::size_t i = 1; i < w.m(); ++i) REQUIRE(w.p(i) < w.p(i - 1));
    CHECK(std::abs(w.c() - c) <= 1e-10 * c);
    CHECK(build_weights(spec) == w);  // bit-for-bit determinism
  }
}

TEST_CASE("property: regime phases partition c") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> cdist(0.0, 3.0), edist(1e-6, 0.4999);
  for (int trial = 0; trial < 2000; ++trial) {
    const double c = cdist(gen), eps = edist(gen);
    const auto r = regime(c, 0.01, 1000, eps);
    const int hits = (c < 1 - eps) + (c > 1 + eps) + (c >= 1 - eps && c <= 1 + eps);
    CHECK(hits == 1);
    if (r.theorem2_hypotheses_met) CHECK(r.phase == Phase::supercritical);
  }
}

TEST_CASE("compensated sum keeps small addends") {
  std::vector<double> xs{1.0};
  for (int i = 0; i < 1000000; ++i) xs.push_back(1e-16);
  CHECK(compensated_sum(xs) == doctest::Approx(1.0 + 1e-10).epsilon(1e-15));
}

TEST_CASE("weight groups") {
  const auto w = build_weights({5, ExplicitModel{{0.2, 0.0, 0.1, 0.2, 0.2}}});
  REQUIRE(w.groups().size() == 2);
  CHECK(w.groups()[0].value == 0.1);
  CHECK(w.groups()[0].count == 1);
  CHECK(w.groups()[1].value == 0.2);
  CHECK(w.groups()[1].count == 3);
}
