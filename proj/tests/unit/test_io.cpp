#include "doctest.h"

#include <cmath>
#include <filesystem>

#include "rig/io.hpp"

using namespace rig;

TEST_CASE("WeightSpec JSON round trip") {
  const std::vector<WeightSpec> specs{
      {100, UniformModel{2.0, 50}},
      {1000, PowerLawModel{1.5, 0.8, 300}},
      {4, ExplicitModel{{0.2, 0.5, 0.9}}},
  };
  for (const auto& spec : specs) {
    const json j = spec;
    const auto back = j.get<WeightSpec>();
    CHECK(build_weights(back) == build_weights(spec));
    CHECK(json(back) == j);
  }
  const auto parsed =
      json::parse(R"({"n": 10, "model": {"kind": "uniform", "c": 2.0, "m": 5}})").get<WeightSpec>();
  CHECK(parsed.n == 10);
  CHECK(std::get<UniformModel>(parsed.model).m == 5);
  CHECK_THROWS_AS(json::parse(R"({"n": 10, "model": {"kind": "zipf"}})").get<WeightSpec>(),
                  std::invalid_argument);
  CHECK_THROWS_AS(json::parse(R"({"n": 10, "model": {"kind": "uniform", "c": 2.0}})").get<WeightSpec>(),
                  json::exception);
}

TEST_CASE("BipartiteSample JSON round trip") {
  const auto w = build_weights({200, UniformModel{2.0, 100}});
  const auto b = sample_bipartite(w, 17);
  const json j = b;
  CHECK(j.at("n") == 200);
  CHECK(j.at("seed") == 17);
  CHECK(j.at("attrs").size() == 100);
  CHECK(sample_from_json(json::parse(j.dump())) == b);
  CHECK_THROWS(sample_from_json(json::parse(R"({"n": 2, "seed": 0, "attrs": [[0, 5]]})")));
}

TEST_CASE("summary formats") {
  ComponentSummary s = summarize_sizes(300, std::vector<std::uint32_t>(150, 2));
  const json j = s;
  CHECK(j.at("sizes_topk").size() == 100);
  CHECK(j.at("largest") == 2);
  CHECK(j.at("second") == 2);
  CHECK(j.at("count") == 150);
  CHECK(j.at("n") == 300);

  ExtinctionSolution e;
  e.rho = 0.25;
  e.iterations = 7;
  e.critical_band = true;
  const json ej = e;
  for (const char* key : {"rho", "iterations", "residual", "critical_band"}) CHECK(ej.contains(key));
  CHECK(ej.at("critical_band") == true);

  DiscoveryTrace t;
  t.steps.push_back({1, 0, {0}, 2, std::nan(""), 2});
  const json tj = t;
  CHECK(tj.at("steps")[0].at("W").is_null());
  CHECK(tj.at("steps")[0].at("X") == 2);

  const json bj = chernoff_upper(100, 0.1, 10.0);
  CHECK(bj.at("kind") == "chernoff_upper");
  CHECK(bj.at("parameters").at("t") == 10.0);
}

TEST_CASE("RegimeReport and SweepConfig round trips") {
  const auto r = regime(2.0, 1e-3, 100000);
  const auto back = json(r).get<RegimeReport>();
  CHECK(back.c == r.c);
  CHECK(back.p_max == r.p_max);
  CHECK(back.phase == r.phase);
  CHECK(back.gamma_witness == r.gamma_witness);
  CHECK(back.theorem2_hypotheses_met == r.theorem2_hypotheses_met);

  auto cfg = example1_preset(10000, 0.5, 0.5, 2.0, 4, 3, 42);
  cfg.thresholds.K = 20.0;
  const auto cb = json(cfg).get<SweepConfig>();
  CHECK(json(cb) == json(cfg));
  CHECK(cb.family.m_alpha == 0.5);
  CHECK(cb.thresholds.K == 20.0);

  const auto minimal = json::parse(R"({"n": 100, "model": {"kind": "uniform", "m": 100},
      "c_min": 2.0, "trials_per_point": 2, "master_seed": 1})").get<SweepConfig>();
  CHECK(minimal.c_max == 2.0);
  CHECK(minimal.steps == 1);
  CHECK(minimal.thresholds.delta == 0.02);
  CHECK_NOTHROW(minimal.validate());
}

TEST_CASE("file helpers report the path") {
  const auto missing = std::filesystem::temp_directory_path() / "rig-does-not-exist" / "x.json";
  try {
    read_json_file(missing);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("x.json") != std::string::npos);
  }
  CHECK_THROWS_AS(write_text_file(missing, "{}"), std::runtime_error);

  const auto path = std::filesystem::temp_directory_path() / "rig-io-test.json";
  write_text_file(path, "{\"a\": 1}");
  CHECK(read_json_file(path).at("a") == 1);
  write_text_file(path, "{nope");
  CHECK_THROWS_AS(read_json_file(path), std::runtime_error);
  std::filesystem::remove(path);
}
