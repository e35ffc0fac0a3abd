// chaosmab command-line front end: spatiotemporal-chaos dynamics dumps,
// single decision-making episodes, Monte Carlo benchmark sweeps, power-law
// fits and multi-policy comparisons.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaosmab/config.hpp"
#include "chaosmab/dynamics.hpp"
#include "chaosmab/io.hpp"
#include "chaosmab/runner.hpp"

namespace fs = std::filesystem;
using namespace chaosmab;

namespace {

// Common flags shared by the subcommands. Values are funneled through
// apply_config_entry so the CLI and the config file parse identically;
// command-line flags win over the file.
struct CommonCli {
  std::string config_path;
  std::map<std::string, std::string> overrides;

  void attach(CLI::App& cmd) {
    cmd.add_option("--config", config_path, "flat key=value config file");
    add(cmd, "--seed", "seed", "master seed (u64)");
    add(cmd, "--threads", "threads", "worker threads for cycles (0 = hardware)");
    add(cmd, "--out", "out", "output directory");
    add(cmd, "--policy", "policy",
        "policy list: tow-chaos, tow-uniform-noise, thompson, ucb1tuned");
    add(cmd, "--arms", "arms", "comma-separated arm counts to sweep");
    add(cmd, "--plays", "plays", "plays per cycle (auto = per-policy budget)");
    add(cmd, "--cycles", "cycles", "Monte Carlo cycles per sweep point");
    add(cmd, "--mode", "mode", "map mode: continuous or quantized");
    add(cmd, "--k", "k", "bias coefficient");
    add(cmd, "--grid-m", "grid_m", "macro-pixels per side (0 = fit to arms)");
    add(cmd, "--jitter", "jitter", "relative per-pixel map parameter spread");
    add(cmd, "--threshold", "threshold", "CDR threshold for plays-to-threshold");
    add(cmd, "--regret-eval", "regret_eval_play", "play at which regret is reported");
  }

  ExperimentConfig resolve(ExperimentConfig base = {}) const {
    ExperimentConfig cfg = config_path.empty()
                               ? std::move(base)
                               : load_config_file(config_path, std::move(base));
    for (const auto& [key, value] : overrides) apply_config_entry(cfg, key, value);
    cfg.validate();
    return cfg;
  }

 private:
  void add(CLI::App& cmd, const std::string& flag, std::string key,
           const std::string& help) {
    cmd.add_option_function<std::string>(
        flag,
        [this, key = std::move(key)](const std::string& v) { overrides[key] = v; },
        help);
  }
};

void print_sweep_line(const SweepResult& s) {
  std::cout << policy_name(s.kind) << " N=" << s.arms << " plays=" << s.plays
            << " cycles=" << s.cycles << " plays_to_threshold=";
  if (s.crossing)
    std::cout << *s.crossing;
  else
    std::cout << "-";
  std::cout << " final_cdr=" << format_g9(s.cdr.empty() ? 0.0 : s.cdr.back());
  if (s.regret_at_eval)
    std::cout << " regret_at_eval=" << format_g9(*s.regret_at_eval);
  std::cout << "\n";
}

void print_fit_line(const FitRecord& f) {
  std::cout << policy_name(f.kind) << " fit: plays = " << format_g9(f.fit.coefficient)
            << " * N^" << format_g9(f.fit.exponent)
            << " (log-space RMS " << format_g9(f.fit.residual) << ", "
            << f.points.size() << " points)\n";
}

int cmd_dynamics(const CommonCli& common, int frames, int bins, int hist_samples,
                 int transient, double beta_lo, double beta_hi, int beta_steps,
                 int bif_samples, int lyap_iterations, double x0) {
  ExperimentConfig cfg = common.resolve();
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  // field snapshots in the configured mode (frame 0 is the initial state)
  const int arms = cfg.arm_counts.front();
  ChaosField field(cfg.geometry_for(arms), cfg.map, cfg.mode,
                   derive_seed(cfg.master_seed, {kFieldStream}), cfg.jitter);
  std::vector<std::pair<std::uint64_t, std::vector<double>>> snapshots;
  snapshots.reserve(static_cast<std::size_t>(frames) + 1);
  const auto snap = [&] {
    snapshots.emplace_back(field.frame(),
                           std::vector<double>(field.states().begin(),
                                               field.states().end()));
  };
  snap();
  for (int i = 0; i < frames; ++i) {
    field.step();
    snap();
  }
  write_field_csv(dir / "field.csv", field.geometry().side, snapshots);

  // amplitude histogram of a continuous single-pixel orbit
  double x = x0;
  for (int i = 0; i < transient; ++i) x = step_map(x, cfg.map, MapMode::continuous);
  std::vector<double> waveform(static_cast<std::size_t>(hist_samples));
  for (double& v : waveform) {
    x = step_map(x, cfg.map, MapMode::continuous);
    v = x;
  }
  write_histogram_csv(dir / "histogram.csv", amplitude_histogram(waveform, bins));

  const auto bif = bifurcation_scan(cfg.map, beta_lo, beta_hi, beta_steps,
                                    transient, bif_samples, x0);
  write_bifurcation_csv(dir / "bifurcation.csv", bif);

  std::vector<std::pair<double, double>> lambdas;
  lambdas.reserve(bif.size());
  for (const auto& point : bif)
    lambdas.emplace_back(point.beta, lyapunov_exponent(cfg.map, point.beta,
                                                       lyap_iterations, transient, x0));
  write_lyapunov_csv(dir / "lyapunov.csv", lambdas);

  std::cout << "dynamics outputs written to " << dir.string() << "\n";
  return 0;
}

int cmd_run(const CommonCli& common, int cycle) {
  ExperimentConfig cfg = common.resolve();
  const PolicyKind kind = cfg.policies.front();
  const int arms = cfg.arm_counts.front();
  const RunTrace trace = run_episode(cfg, kind, arms, cycle);

  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  write_trace_csv(dir / "trace.csv", trace);

  std::size_t hits = 0;
  std::vector<std::size_t> counts(static_cast<std::size_t>(arms), 0);
  for (const auto& p : trace.plays) {
    hits += p.hit;
    ++counts[p.arm];
  }
  const auto most = std::max_element(counts.begin(), counts.end()) - counts.begin();
  std::cout << policy_name(kind) << " N=" << arms << " cycle=" << cycle
            << " plays=" << trace.plays.size() << " hits=" << hits
            << " most_selected_arm=" << most + 1 << " ("
            << counts[static_cast<std::size_t>(most)] << " plays)\n"
            << "trace written to " << (dir / "trace.csv").string() << "\n";
  return 0;
}

int cmd_bench(const CommonCli& common) {
  ExperimentConfig cfg = common.resolve();
  if (cfg.policies.size() != 1)
    throw std::invalid_argument("bench runs a single policy; use compare for several");
  const BenchmarkResult result = run_benchmark(cfg);
  for (const auto& s : result.sweeps) print_sweep_line(s);
  for (const auto& f : result.fits) print_fit_line(f);
  std::cout << "outputs written to " << cfg.out_dir << "\n";
  return 0;
}

int cmd_compare(const CommonCli& common) {
  ExperimentConfig base;
  base.policies = {PolicyKind::tow_chaos, PolicyKind::thompson, PolicyKind::ucb1tuned};
  ExperimentConfig cfg = common.resolve(std::move(base));
  const BenchmarkResult result = run_benchmark(cfg);

  std::cout << "policy            ";
  for (int n : cfg.arm_counts) std::cout << "\tN=" << n;
  std::cout << "\n";
  for (PolicyKind kind : cfg.policies) {
    std::string row(policy_name(kind));
    row.resize(18, ' ');
    std::cout << row;
    for (int n : cfg.arm_counts) {
      const auto it = std::find_if(result.sweeps.begin(), result.sweeps.end(),
                                   [&](const SweepResult& s) {
                                     return s.kind == kind && s.arms == n;
                                   });
      std::cout << '\t';
      if (it != result.sweeps.end() && it->crossing)
        std::cout << *it->crossing;
      else
        std::cout << '-';
    }
    std::cout << "\n";
  }
  for (const auto& f : result.fits) print_fit_line(f);
  std::cout << "outputs written to " << cfg.out_dir << "\n";
  return 0;
}

int cmd_fit(const std::string& input, const std::string& out_dir) {
  const auto rows = read_scaling_csv(input);
  if (rows.empty()) throw std::runtime_error("no data rows in " + input);

  std::vector<FitRecord> fits;
  std::vector<std::string> order;
  for (const auto& row : rows)
    if (std::find(order.begin(), order.end(), row.policy) == order.end())
      order.push_back(row.policy);
  for (const auto& name : order) {
    FitRecord record;
    record.kind = parse_policy(name);
    for (const auto& row : rows)
      if (row.policy == name) record.points.emplace_back(row.arms, row.plays);
    record.fit = fit_power_law(record.points);
    fits.push_back(std::move(record));
  }
  for (const auto& f : fits) print_fit_line(f);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_fit_json(fs::path(out_dir) / "fit.json", fits);
    std::cout << "fit written to " << (fs::path(out_dir) / "fit.json").string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("chaosmab ") + std::string(version_string()) +
               " — decision making on spatiotemporal chaos"};
  app.require_subcommand(1);

  auto* dynamics = app.add_subcommand(
      "dynamics", "field snapshots, amplitude histogram, bifurcation diagram, "
                  "Lyapunov exponents");
  CommonCli dyn_common;
  dyn_common.attach(*dynamics);
  int frames = 32, bins = 40, hist_samples = 100000, transient = 1000;
  double beta_lo = 0.1, beta_hi = 4.0, x0 = 150.0;
  int beta_steps = 400, bif_samples = 100, lyap_iterations = 20000;
  dynamics->add_option("--frames", frames, "snapshot frames to record");
  dynamics->add_option("--bins", bins, "histogram bins");
  dynamics->add_option("--hist-samples", hist_samples, "orbit samples for the histogram");
  dynamics->add_option("--transient", transient, "transient iterations to discard");
  dynamics->add_option("--beta-lo", beta_lo, "sweep start");
  dynamics->add_option("--beta-hi", beta_hi, "sweep end");
  dynamics->add_option("--beta-steps", beta_steps, "sweep points");
  dynamics->add_option("--samples", bif_samples, "attractor samples per beta");
  dynamics->add_option("--iterations", lyap_iterations, "Lyapunov orbit length");
  dynamics->add_option("--x0", x0, "initial map state");

  auto* run = app.add_subcommand("run", "one decision-making episode with a trace dump");
  CommonCli run_common;
  run_common.attach(*run);
  int cycle = 0;
  run->add_option("--cycle", cycle, "cycle index (selects the seed stream)");

  auto* bench = app.add_subcommand("bench", "Monte Carlo sweep for one policy");
  CommonCli bench_common;
  bench_common.attach(*bench);

  auto* compare = app.add_subcommand("compare", "multi-policy sweep and summary table");
  CommonCli compare_common;
  compare_common.attach(*compare);

  auto* fit = app.add_subcommand("fit", "power-law fit of a scaling.csv");
  std::string fit_input, fit_out;
  fit->add_option("--in", fit_input, "scaling.csv produced by bench/compare")->required();
  fit->add_option("--out", fit_out, "directory for fit.json (default: print only)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dynamics->parsed())
      return cmd_dynamics(dyn_common, frames, bins, hist_samples, transient,
                          beta_lo, beta_hi, beta_steps, bif_samples,
                          lyap_iterations, x0);
    if (run->parsed()) return cmd_run(run_common, cycle);
    if (bench->parsed()) return cmd_bench(bench_common);
    if (compare->parsed()) return cmd_compare(compare_common);
    if (fit->parsed()) return cmd_fit(fit_input, fit_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
