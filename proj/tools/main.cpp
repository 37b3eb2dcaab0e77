// rig: command-line front end for sampling, component analysis and
// criticality sweeps of random intersection graphs.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "rig/io.hpp"

using namespace rig;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

WeightSpec load_spec(const std::string& path) { return read_json_file(path).get<WeightSpec>(); }

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

int cmd_sample(const std::string& spec_path, std::uint64_t seed, const std::string& out,
               unsigned workers) {
  const auto w = build_weights(load_spec(spec_path));
  const auto b = sample_bipartite(w, seed, {workers});
  write_text_file(out, json(b).dump() + "\n");
  std::cout << json{{"n", b.n()}, {"m", b.m()}, {"edges", b.edge_count()}, {"out", out}}.dump()
            << "\n";
  return 0;
}

int cmd_components(const std::string& in) {
  const auto b = sample_from_json(read_json_file(in));
  std::cout << json(component_sizes(b)).dump() << "\n";
  return 0;
}

int cmd_discover(const std::string& in, std::uint32_t start, const std::string& spec_path,
                 std::optional<std::size_t> max_steps, bool as_json) {
  const auto b = sample_from_json(read_json_file(in));
  std::vector<double> p;
  if (!spec_path.empty()) {
    const auto w = build_weights(load_spec(spec_path));
    if (w.m() != b.m() || w.n() != b.n()) {
      throw UsageError("spec does not match the sample's n and m");
    }
    p.assign(w.p().begin(), w.p().end());
  }
  const auto trace = discover(b, VertexAttributeIndex(b), p, start, max_steps);
  if (as_json) {
    std::cout << json(trace).dump() << "\n";
    return 0;
  }
  std::printf("%8s %10s %14s %10s\n", "i", "X_i", "W_i", "|U_i|");
  for (const auto& s : trace.steps) {
    char weight[32];
    if (p.empty()) std::snprintf(weight, sizeof weight, "-");
    else std::snprintf(weight, sizeof weight, "%.6g", s.attribute_weight);
    std::printf("%8zu %10u %14s %10u\n", s.index, s.new_vertices, weight, s.unsaturated);
  }
  std::printf("component_size %llu, terminated_at %zu%s\n",
              static_cast<unsigned long long>(trace.component_size),
              trace.terminated_at, trace.exhausted ? "" : " (step limit)");
  return 0;
}

int cmd_extinction(const std::string& spec_path, std::optional<double> tol, double epsilon_c) {
  ExtinctionOptions opt;
  if (tol) opt.tol = *tol;
  opt.epsilon_c = epsilon_c;
  std::cout << json(extinction_probability(build_weights(load_spec(spec_path)), opt)).dump()
            << "\n";
  return 0;
}

int cmd_gw_sim(const std::string& spec_path, std::uint64_t runs, std::uint64_t seed,
               std::uint64_t pop_cap, std::uint64_t gen_cap, unsigned workers) {
  const auto w = build_weights(load_spec(spec_path));
  std::cout << json(estimate_extinction(w, runs, seed, pop_cap, gen_cap, workers)).dump() << "\n";
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& csv_path,
              const std::string& report_path, unsigned workers, bool record_timing) {
  auto cfg = read_json_file(config_path).get<SweepConfig>();
  if (record_timing) cfg.record_timing = true;
  cfg.validate();

  const auto records = run_sweep(cfg, workers);
  std::ostringstream csv;
  write_csv(csv, records);
  write_text_file(csv_path, csv.str());

  const auto regimes = sweep_regimes(cfg);
  const auto report = verify_theorems(records, regimes, cfg.thresholds);
  const json out{{"config", cfg},
                 {"thresholds", cfg.thresholds},
                 {"regimes", regimes},
                 {"verification", report},
                 {"gap", giant_gap_scan(records)}};
  write_text_file(report_path, out.dump(2) + "\n");
  std::cout << json{{"records", records.size()}, {"pass", report.pass()}, {"csv", csv_path},
                    {"report", report_path}}
                   .dump()
            << "\n";
  return report.pass() ? 0 : kVerifyFailed;
}

int cmd_verify(const std::string& csv_path, const std::string& hyp_path,
               const std::string& thresholds_path) {
  std::ifstream in(csv_path);
  if (!in) throw UsageError("cannot open '" + csv_path + "' for reading");
  const auto records = read_csv(in);
  if (records.empty()) throw UsageError("'" + csv_path + "' holds no records");

  // Either a bare array of regime reports or a sweep report carrying one.
  const json h = read_json_file(hyp_path);
  const json& list = h.is_array() ? h : h.at("regimes");
  const auto regimes = list.get<std::vector<RegimeReport>>();
  VerifyThresholds thresholds;
  if (!thresholds_path.empty()) {
    thresholds = read_json_file(thresholds_path).at("thresholds").get<VerifyThresholds>();
  } else if (h.is_object() && h.contains("thresholds")) {
    thresholds = h.at("thresholds").get<VerifyThresholds>();
  }
  const auto report = verify_theorems(records, regimes, thresholds);
  std::cout << json(report).dump(2) << "\n";
  return report.pass() ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random intersection graph sampler, component analysis and criticality sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rig 0.1.0");

  std::string spec, in, out, config, csv, report, hypotheses, thresholds;
  std::uint64_t seed = 0, runs = 10000, pop_cap = 1000000, gen_cap = 10000;
  std::uint32_t start = 0;
  unsigned workers = default_workers();
  std::optional<double> tol;
  std::optional<std::size_t> max_steps;
  double epsilon_c = kDefaultEpsilonC;
  bool as_json = false, record_timing = false;

  auto* sample = app.add_subcommand("sample", "Draw a bipartite sample from a weight spec");
  sample->add_option("--spec", spec, "Weight spec JSON")->required()->check(CLI::ExistingFile);
  sample->add_option("--seed", seed, "Sample seed")->required();
  sample->add_option("--out", out, "Output sample JSON")->required();
  sample->add_option("--workers", workers, "Sampling threads")->check(CLI::PositiveNumber);

  auto* components = app.add_subcommand("components", "Connected component sizes of a sample");
  components->add_option("--in", in, "Sample JSON")->required()->check(CLI::ExistingFile);

  auto* disc = app.add_subcommand("discover", "Component discovery trace from a start vertex");
  disc->add_option("--in", in, "Sample JSON")->required()->check(CLI::ExistingFile);
  disc->add_option("--start", start, "Start vertex")->required();
  disc->add_option("--spec", spec, "Weight spec JSON, enables the W_i column")
      ->check(CLI::ExistingFile);
  disc->add_option("--max-steps", max_steps, "Stop after this many steps");
  disc->add_flag("--json", as_json, "Print the full trace as JSON");

  auto* ext = app.add_subcommand("extinction", "Extinction probability of the branching process");
  ext->add_option("--spec", spec, "Weight spec JSON")->required()->check(CLI::ExistingFile);
  ext->add_option("--tol", tol, "Fixed-point tolerance")->check(CLI::PositiveNumber);
  ext->add_option("--epsilon-c", epsilon_c, "Critical band half-width");

  auto* gw = app.add_subcommand("gw-sim", "Monte Carlo extinction frequency");
  gw->add_option("--spec", spec, "Weight spec JSON")->required()->check(CLI::ExistingFile);
  gw->add_option("--runs", runs, "Number of runs")->required()->check(CLI::PositiveNumber);
  gw->add_option("--seed", seed, "Master seed")->required();
  gw->add_option("--pop-cap", pop_cap, "Survival population cap")->check(CLI::PositiveNumber);
  gw->add_option("--gen-cap", gen_cap, "Survival generation cap")->check(CLI::PositiveNumber);
  gw->add_option("--workers", workers, "Threads")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Criticality sweep with theorem verification");
  sweep->add_option("--config", config, "Sweep config JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out-csv", csv, "Per-trial CSV")->required();
  sweep->add_option("--out-report", report, "Report JSON")->required();
  sweep->add_option("--workers", workers, "Threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--record-timing", record_timing, "Fill wall_ms (CSV no longer reproducible)");

  auto* verify = app.add_subcommand("verify", "Check a sweep CSV against regime hypotheses");
  verify->add_option("--csv", csv, "Sweep CSV")->required()->check(CLI::ExistingFile);
  verify->add_option("--hypotheses", hypotheses, "Regime reports or sweep report JSON")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--thresholds", thresholds, "JSON with a \"thresholds\" object (K, kappa, delta)")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*sample) return cmd_sample(spec, seed, out, workers);
    if (*components) return cmd_components(in);
    if (*disc) return cmd_discover(in, start, spec, max_steps, as_json);
    if (*ext) return cmd_extinction(spec, tol, epsilon_c);
    if (*gw) return cmd_gw_sim(spec, runs, seed, pop_cap, gen_cap, workers);
    if (*sweep) return cmd_sweep(config, csv, report, workers, record_timing);
    if (*verify) return cmd_verify(csv, hypotheses, thresholds);
  } catch (const std::exception& e) {
    std::cerr << "rig: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
