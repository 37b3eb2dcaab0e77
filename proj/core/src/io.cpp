#include "rig/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rig {

namespace {

json nullable(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

void to_json(json& j, const WeightSpec& spec) {
  json model;
  std::visit(
      [&](const auto& mdl) {
        using T = std::decay_t<decltype(mdl)>;
        if constexpr (std::is_same_v<T, UniformModel>) {
          model = {{"kind", "uniform"}, {"c", mdl.c}, {"m", mdl.m}};
        } else if constexpr (std::is_same_v<T, PowerLawModel>) {
          model = {{"kind", "powerlaw"}, {"tau", mdl.tau}, {"c", mdl.c}, {"m", mdl.m}};
        } else {
          model = {{"kind", "explicit"}, {"values", mdl.values}};
        }
      },
      spec.model);
  j = {{"n", spec.n}, {"model", model}};
}

void from_json(const json& j, WeightSpec& spec) {
  spec.n = j.at("n").get<std::uint32_t>();
  const json& model = j.at("model");
  const auto kind = model.at("kind").get<std::string>();
  if (kind == "uniform") {
    spec.model = UniformModel{model.at("c").get<double>(), model.at("m").get<std::size_t>()};
  } else if (kind == "powerlaw") {
    spec.model = PowerLawModel{model.at("tau").get<double>(), model.at("c").get<double>(),
                               model.at("m").get<std::size_t>()};
  } else if (kind == "explicit") {
    spec.model = ExplicitModel{model.at("values").get<std::vector<double>>()};
  } else {
    throw std::invalid_argument("unknown model kind '" + kind + "'");
  }
}

void to_json(json& j, const BipartiteSample& b) {
  j = {{"n", b.n()}, {"seed", b.seed()}, {"attrs", b.to_lists()}};
}

BipartiteSample sample_from_json(const json& j) {
  return BipartiteSample::from_lists(j.at("n").get<std::uint32_t>(),
                                     j.at("seed").get<std::uint64_t>(),
                                     j.at("attrs").get<std::vector<std::vector<VertexId>>>());
}

void to_json(json& j, const ComponentSummary& s) {
  const std::size_t k = std::min<std::size_t>(s.sizes.size(), 100);
  j = {{"n", s.n},
       {"sizes_topk", std::vector<std::uint32_t>(s.sizes.begin(), s.sizes.begin() + k)},
       {"largest", s.largest},
       {"second", s.second_largest},
       {"count", s.count}};
}

void to_json(json& j, const ExactSizeDistribution& d) {
  json support = json::object();
  for (const auto& [size, prob] : d.support) support[std::to_string(size)] = prob;
  j = {{"n", d.n}, {"m", d.m}, {"support", support}};
}

void to_json(json& j, const DiscoveryTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"i", s.index},
                     {"vertex", s.vertex},
                     {"new_attributes", s.new_attributes},
                     {"X", s.new_vertices},
                     {"W", nullable(s.attribute_weight)},
                     {"U", s.unsaturated}});
  }
  j = {{"start", t.start},
       {"component_size", t.component_size},
       {"terminated_at", t.terminated_at},
       {"exhausted", t.exhausted},
       {"steps", steps}};
}

void to_json(json& j, const ExtinctionSolution& s) {
  j = {{"rho", s.rho},
       {"iterations", s.iterations},
       {"residual", s.residual},
       {"critical_band", s.critical_band},
       {"converged", s.converged}};
}

void to_json(json& j, const GwEstimate& e) {
  j = {{"runs", e.runs},
       {"extinct", e.extinct},
       {"extinction_frequency", e.frequency},
       {"standard_error", e.standard_error}};
}

void to_json(json& j, const TailBound& b) {
  json params = json::object();
  for (const auto& [name, value] : b.parameters) params[name] = value;
  j = {{"bound", b.bound}, {"kind", to_string(b.kind)}, {"parameters", params}};
}

void to_json(json& j, const RegimeReport& r) {
  j = {{"c", r.c},
       {"p_max", r.p_max},
       {"n", r.n},
       {"gamma_witness", r.gamma_witness ? json(*r.gamma_witness) : json(nullptr)},
       {"phase", to_string(r.phase)},
       {"theorem2_hypotheses_met", r.theorem2_hypotheses_met},
       {"hypothesis_marginal", r.hypothesis_marginal}};
}

void from_json(const json& j, RegimeReport& r) {
  r.c = j.at("c").get<double>();
  r.p_max = j.at("p_max").get<double>();
  r.n = j.at("n").get<std::uint32_t>();
  const json& g = j.at("gamma_witness");
  r.gamma_witness = g.is_null() ? std::nullopt : std::optional<double>(g.get<double>());
  const auto phase = j.at("phase").get<std::string>();
  if (phase == "subcritical") r.phase = Phase::subcritical;
  else if (phase == "critical") r.phase = Phase::critical;
  else if (phase == "supercritical") r.phase = Phase::supercritical;
  else throw std::invalid_argument("unknown phase '" + phase + "'");
  r.theorem2_hypotheses_met = j.at("theorem2_hypotheses_met").get<bool>();
  r.hypothesis_marginal = j.value("hypothesis_marginal", false);
}

void to_json(json& j, const VerifyThresholds& t) {
  j = {{"K", t.K}, {"kappa", t.kappa}, {"delta", t.delta}};
}

void from_json(const json& j, VerifyThresholds& t) {
  const VerifyThresholds defaults;
  t.K = j.value("K", defaults.K);
  t.kappa = j.value("kappa", defaults.kappa);
  t.delta = j.value("delta", defaults.delta);
}

void to_json(json& j, const ModelFamily& f) {
  j = {{"kind", f.kind == ModelFamily::Kind::uniform ? "uniform" : "powerlaw"}};
  if (f.kind == ModelFamily::Kind::powerlaw) j["tau"] = f.tau;
  if (f.m) j["m"] = *f.m;
  if (f.m_alpha) j["m_alpha"] = *f.m_alpha;
  if (f.m_beta) j["m_beta"] = *f.m_beta;
}

void from_json(const json& j, ModelFamily& f) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "uniform") {
    f.kind = ModelFamily::Kind::uniform;
  } else if (kind == "powerlaw") {
    f.kind = ModelFamily::Kind::powerlaw;
    f.tau = j.at("tau").get<double>();
  } else {
    throw std::invalid_argument("sweep family must be 'uniform' or 'powerlaw', got '" + kind + "'");
  }
  if (j.contains("m")) f.m = j.at("m").get<std::uint64_t>();
  if (j.contains("m_alpha")) f.m_alpha = j.at("m_alpha").get<double>();
  if (j.contains("m_beta")) f.m_beta = j.at("m_beta").get<double>();
}

void to_json(json& j, const SweepConfig& cfg) {
  j = {{"n", cfg.n},
       {"model", cfg.family},
       {"c_min", cfg.c_min},
       {"c_max", cfg.c_max},
       {"steps", cfg.steps},
       {"trials_per_point", cfg.trials_per_point},
       {"master_seed", cfg.master_seed},
       {"epsilon_c", cfg.epsilon_c},
       {"tol", cfg.solver.tol},
       {"max_iter", cfg.solver.max_iter},
       {"thresholds", cfg.thresholds},
       {"record_timing", cfg.record_timing}};
}

void from_json(const json& j, SweepConfig& cfg) {
  const SweepConfig defaults;
  cfg.n = j.at("n").get<std::uint32_t>();
  cfg.family = j.at("model").get<ModelFamily>();
  cfg.c_min = j.at("c_min").get<double>();
  cfg.c_max = j.value("c_max", cfg.c_min);
  cfg.steps = j.value("steps", defaults.steps);
  cfg.trials_per_point = j.at("trials_per_point").get<std::size_t>();
  cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
  cfg.epsilon_c = j.value("epsilon_c", defaults.epsilon_c);
  cfg.solver.tol = j.value("tol", defaults.solver.tol);
  cfg.solver.max_iter = j.value("max_iter", defaults.solver.max_iter);
  cfg.thresholds = j.value("thresholds", defaults.thresholds);
  cfg.record_timing = j.value("record_timing", false);
}

void to_json(json& j, const VerificationReport& r) {
  j = {{"pass", r.pass()},
       {"thresholds", r.thresholds},
       {"critical_records", r.critical_records},
       {"failed_records", r.failed_records},
       {"unmatched_records", r.unmatched_records}};
  if (r.theorem1) {
    j["theorem1"] = {{"records", r.theorem1->records},
                     {"max_L1_over_bound", r.theorem1->max_L1_over_bound},
                     {"pass", r.theorem1->pass}};
  }
  if (r.theorem2) {
    j["theorem2"] = {{"points", r.theorem2->points},
                     {"records", r.theorem2->records},
                     {"skipped_hypotheses_unmet", r.theorem2->skipped_hypotheses_unmet},
                     {"max_mean_abs_error", r.theorem2->max_mean_abs_error},
                     {"max_L2_over_bound", r.theorem2->max_L2_over_bound},
                     {"pass", r.theorem2->pass}};
  }
  if (r.theorem3) {
    const auto& t3 = *r.theorem3;
    j["theorem3"] = {
        {"records", t3.records},
        {"min_L1_times_p", t3.min_L1_times_p ? json(*t3.min_L1_times_p) : json(nullptr)},
        {"min_L1_over_bound", t3.min_L1_over_bound ? json(*t3.min_L1_over_bound) : json(nullptr)},
        {"pass", t3.pass}};
  }
}

void to_json(json& j, const GapSummary& g) {
  auto point = [](const GapPoint& p) {
    return json{{"c", p.c}, {"median_L1", p.median_L1}, {"trials", p.trials}};
  };
  json curve = json::array();
  for (const auto& p : g.curve) curve.push_back(point(p));
  j = {{"curve", curve},
       {"below", g.below ? point(*g.below) : json(nullptr)},
       {"above", g.above ? point(*g.above) : json(nullptr)},
       {"ratio", g.complete ? json(g.ratio) : json(nullptr)},
       {"complete", g.complete}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace rig
