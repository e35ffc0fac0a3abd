#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "chaosmab/bandit.hpp"
#include "chaosmab/io.hpp"
#include "chaosmab/runner.hpp"

using namespace chaosmab;
namespace fs = std::filesystem;

namespace {

bool traces_equal(const RunTrace& a, const RunTrace& b) {
  if (a.plays.size() != b.plays.size()) return false;
  for (std::size_t i = 0; i < a.plays.size(); ++i)
    if (a.plays[i].arm != b.plays[i].arm || a.plays[i].hit != b.plays[i].hit)
      return false;
  return true;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.arm_counts = {8};
  cfg.plays = 300;
  cfg.cycles = 6;
  cfg.grid_side = 0;
  cfg.regret_eval_play = 100;
  return cfg;
}

}  // namespace

TEST_CASE("zero plays yield an empty trace") {
  auto cfg = small_config();
  cfg.plays = 0;
  const auto trace = run_episode(cfg, PolicyKind::tow_chaos, 8, 0);
  CHECK(trace.plays.empty());
}

TEST_CASE("episodes are deterministic in (config, cycle)") {
  const auto cfg = small_config();
  for (PolicyKind kind : {PolicyKind::tow_chaos, PolicyKind::tow_uniform_noise,
                          PolicyKind::thompson, PolicyKind::ucb1tuned}) {
    const auto a = run_episode(cfg, kind, 8, 3);
    const auto b = run_episode(cfg, kind, 8, 3);
    CHECK(traces_equal(a, b));
    const auto c = run_episode(cfg, kind, 8, 4);
    CHECK_FALSE(traces_equal(a, c));
  }
}

TEST_CASE("cycle seeds separate policies, arm counts and cycles") {
  std::set<std::uint64_t> seeds;
  int count = 0;
  for (PolicyKind kind : {PolicyKind::tow_chaos, PolicyKind::tow_uniform_noise,
                          PolicyKind::thompson, PolicyKind::ucb1tuned})
    for (int arms : {8, 16, 64})
      for (int cycle = 0; cycle < 50; ++cycle) {
        seeds.insert(cycle_seed(42, kind, arms, cycle));
        ++count;
      }
  CHECK(static_cast<int>(seeds.size()) == count);
}

TEST_CASE("tow-chaos consumes exactly one field frame per play") {
  auto cfg = small_config();
  cfg.plays = 120;
  const int arms = 8, cycle = 2;
  const auto trace = run_episode(cfg, PolicyKind::tow_chaos, arms, cycle);
  REQUIRE(trace.plays.size() == 120);

  // replay the episode by hand from the same streams, one step per play
  const std::uint64_t root = cycle_seed(cfg.master_seed, PolicyKind::tow_chaos, arms, cycle);
  BanditEnv env(cfg.probabilities_for(arms), derive_seed(root, {kEnvStream}));
  Xoshiro256 tie_rng(derive_seed(root, {kTieStream}));
  ChaosField field(cfg.geometry_for(arms), cfg.map, cfg.mode,
                   derive_seed(root, {kFieldStream}), cfg.jitter);
  TowState state(arms, cfg.k);
  for (std::size_t t = 0; t < 120; ++t) {
    field.step();
    const int arm = state.select(field.states().first(arms), tie_rng);
    const bool hit = env.play(arm);
    state.record(arm, hit);
    CHECK(arm == trace.plays[t].arm);
    CHECK(static_cast<std::uint8_t>(hit) == trace.plays[t].hit);
  }
  CHECK(field.frame() == 120);
}

TEST_CASE("the tie-break seed only reroutes tie decisions") {
  auto cfg = small_config();
  cfg.plays = 400;
  const auto base = run_episode(cfg, PolicyKind::tow_uniform_noise, 8, 0);
  cfg.tie_break_seed = 1234;
  const auto seeded = run_episode(cfg, PolicyKind::tow_uniform_noise, 8, 0);
  const auto seeded_again = run_episode(cfg, PolicyKind::tow_uniform_noise, 8, 0);
  CHECK(traces_equal(seeded, seeded_again));
  // integer intensities tie often, so a different tie stream shows up
  CHECK_FALSE(traces_equal(base, seeded));
}

TEST_CASE("every policy produces valid arms and the noise policy needs no field") {
  auto cfg = small_config();
  cfg.plays = 200;
  for (PolicyKind kind : {PolicyKind::tow_chaos, PolicyKind::tow_uniform_noise,
                          PolicyKind::thompson, PolicyKind::ucb1tuned}) {
    const auto trace = run_episode(cfg, kind, 8, 0);
    REQUIRE(trace.plays.size() == 200);
    for (const auto& p : trace.plays) CHECK(p.arm < 8);
  }
}

TEST_CASE("tow-chaos locks onto the best arm at small N") {
  ExperimentConfig cfg;
  cfg.arm_counts = {8};
  cfg.plays = 1200;
  cfg.cycles = 20;
  cfg.grid_side = 0;
  cfg.regret_eval_play = 1000;
  const auto sweep = run_sweep(cfg, PolicyKind::tow_chaos, 8);
  double late = 0.0;
  for (std::size_t t = sweep.cdr.size() - 100; t < sweep.cdr.size(); ++t)
    late += sweep.cdr[t];
  CHECK(late / 100.0 > 0.8);
  CHECK(sweep.regret_at_eval.has_value());
}

TEST_CASE("sweep aggregates match the metrics recomputed from episodes") {
  const auto cfg = small_config();
  const auto sweep = run_sweep(cfg, PolicyKind::thompson, 8);
  std::vector<RunTrace> traces;
  for (int c = 0; c < cfg.cycles; ++c)
    traces.push_back(run_episode(cfg, PolicyKind::thompson, 8, c));
  const auto probs = cfg.probabilities_for(8);
  CHECK(sweep.cdr == cdr_curve(traces, 2));
  CHECK(sweep.regret == regret_curve(traces, probs));
}

TEST_CASE("benchmark outputs are identical across thread budgets") {
  auto cfg = small_config();
  cfg.policies = {PolicyKind::tow_chaos, PolicyKind::thompson};
  cfg.arm_counts = {8, 16};

  const fs::path base = fs::temp_directory_path() / "chaosmab_test_threads";
  fs::remove_all(base);
  cfg.threads = 1;
  cfg.out_dir = (base / "t1").string();
  run_benchmark(cfg);
  cfg.threads = 3;
  cfg.out_dir = (base / "t3").string();
  run_benchmark(cfg);

  for (const char* name : {"cdr.csv", "regret.csv", "scaling.csv", "fit.json", "summary.json"}) {
    INFO(name);
    std::string a = slurp(base / "t1" / name);
    std::string b = slurp(base / "t3" / name);
    // the config echo records the differing out dir and thread count
    if (std::string(name) == "summary.json") continue;
    CHECK(a == b);
  }
}

TEST_CASE("invalid configurations are rejected before any work") {
  auto cfg = small_config();
  cfg.grid_side = 2;
  CHECK_THROWS_AS(run_benchmark(cfg, false), std::invalid_argument);
}
