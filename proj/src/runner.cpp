#include "chaosmab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

#include "chaosmab/bandit.hpp"
#include "chaosmab/io.hpp"

namespace chaosmab {

namespace {

int resolve_workers(int threads, int cycles) {
  int budget = threads;
  if (budget == 0) budget = static_cast<int>(std::thread::hardware_concurrency());
  if (budget < 1) budget = 1;
  return std::min(budget, cycles);
}

// Runs fn(0..cycles-1), possibly on a small worker pool. Exceptions from
// workers are rethrown on the caller after the join.
void for_each_cycle(int threads, int cycles, const std::function<void(int)>& fn) {
  const int workers = resolve_workers(threads, cycles);
  if (workers <= 1) {
    for (int c = 0; c < cycles; ++c) fn(c);
    return;
  }
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int c = next.fetch_add(1);
        if (c >= cycles) return;
        try {
          fn(c);
        } catch (...) {
          const std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

RunTrace run_episode(const ExperimentConfig& config, PolicyKind kind, int arms,
                     int cycle) {
  const std::size_t plays = config.resolved_plays(kind, arms);
  const std::uint64_t root = cycle_seed(config.master_seed, kind, arms, cycle);

  BanditEnv env(config.probabilities_for(arms), derive_seed(root, {kEnvStream}));
  Xoshiro256 tie_rng(config.tie_break_seed
                         ? derive_seed(*config.tie_break_seed,
                                       {policy_seed_id(kind),
                                        static_cast<std::uint64_t>(arms),
                                        static_cast<std::uint64_t>(cycle)})
                         : derive_seed(root, {kTieStream}));
  auto policy = make_policy(kind, arms, config.k);

  std::optional<ChaosField> field;
  std::optional<Xoshiro256> noise_rng;
  std::vector<double> noise;
  if (kind == PolicyKind::tow_chaos) {
    field.emplace(config.geometry_for(arms), config.map, config.mode,
                  derive_seed(root, {kFieldStream}), config.jitter);
  } else if (kind == PolicyKind::tow_uniform_noise) {
    noise_rng.emplace(derive_seed(root, {kNoiseStream}));
    noise.resize(static_cast<std::size_t>(arms));
  }

  RunTrace trace;
  trace.cycle = cycle;
  trace.plays.reserve(plays);
  for (std::size_t t = 0; t < plays; ++t) {
    std::span<const double> intensities;
    if (field) {
      field->step();  // one camera frame per play
      intensities = field->states().first(static_cast<std::size_t>(arms));
    } else if (noise_rng) {
      for (double& v : noise) v = static_cast<double>(noise_rng->next_below(256));
      intensities = noise;
    }
    const int arm = policy->select(intensities, tie_rng);
    const bool hit = env.play(arm);
    policy->record(arm, hit);
    trace.plays.push_back({static_cast<std::uint16_t>(arm),
                           static_cast<std::uint8_t>(hit)});
  }
  return trace;
}

SweepResult run_sweep(const ExperimentConfig& config, PolicyKind kind, int arms) {
  const auto probs = config.probabilities_for(arms);
  const int best_arm = static_cast<int>(
      std::max_element(probs.begin(), probs.end()) - probs.begin());

  std::vector<RunTrace> traces(static_cast<std::size_t>(config.cycles));
  for_each_cycle(config.threads, config.cycles,
                 [&](int c) { traces[static_cast<std::size_t>(c)] =
                                  run_episode(config, kind, arms, c); });

  SweepResult result;
  result.kind = kind;
  result.arms = arms;
  result.plays = config.resolved_plays(kind, arms);
  result.cycles = config.cycles;
  result.cdr = cdr_curve(traces, best_arm);
  result.regret = regret_curve(traces, probs);
  result.crossing = plays_to_threshold(result.cdr, config.threshold);
  if (config.regret_eval_play >= 1 && result.regret.size() >= config.regret_eval_play)
    result.regret_at_eval = result.regret[config.regret_eval_play - 1];
  return result;
}

BenchmarkResult run_benchmark(const ExperimentConfig& config, bool write_outputs) {
  config.validate();

  BenchmarkResult result;
  for (PolicyKind kind : config.policies)
    for (int arms : config.arm_counts)
      result.sweeps.push_back(run_sweep(config, kind, arms));

  for (PolicyKind kind : config.policies) {
    FitRecord record;
    record.kind = kind;
    for (const auto& s : result.sweeps)
      if (s.kind == kind && s.crossing)
        record.points.emplace_back(static_cast<double>(s.arms),
                                   static_cast<double>(*s.crossing));
    if (record.points.size() >= 2) {
      record.fit = fit_power_law(record.points);
      result.fits.push_back(std::move(record));
    }
  }

  if (write_outputs) write_benchmark_outputs(config, result);
  return result;
}

}  // namespace chaosmab
