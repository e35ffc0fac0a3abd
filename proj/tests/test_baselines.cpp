#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "chaosmab/baselines.hpp"

using namespace chaosmab;

namespace {

ArmStats make_stats(const std::vector<int>& wins, const std::vector<int>& pulls) {
  ArmStats s(static_cast<int>(wins.size()));
  for (std::size_t i = 0; i < wins.size(); ++i) {
    for (int w = 0; w < wins[i]; ++w) s.record(static_cast<int>(i), true);
    for (int l = 0; l < pulls[i] - wins[i]; ++l) s.record(static_cast<int>(i), false);
  }
  return s;
}

}  // namespace

TEST_CASE("stats stay consistent with Bernoulli rewards") {
  ArmStats s(3);
  s.record(1, true);
  s.record(1, false);
  s.record(2, true);
  CHECK(s.pulls(1) == 2);
  CHECK(s.wins(1) == 1);
  CHECK(s.reward_sum(1) == 1.0);
  CHECK(s.reward_sum_squares(1) == 1.0);
  CHECK(s.mean(1) == 0.5);
  CHECK(s.mean(0) == 0.0);
  CHECK(s.total_pulls() == 3);
  CHECK_THROWS_AS(s.record(3, true), std::out_of_range);
}

TEST_CASE("thompson trivially picks a lone arm and a dominant arm") {
  Xoshiro256 rng(1);
  ArmStats lone(1);
  for (int i = 0; i < 100; ++i) CHECK(thompson_select(lone, rng) == 0);

  const auto stats = make_stats({1000, 0}, {1000, 1000});
  int first = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) first += thompson_select(stats, rng) == 0;
  CHECK(static_cast<double>(first) / n >= 0.999);
}

TEST_CASE("thompson with no data is symmetric across arms") {
  Xoshiro256 rng(5);
  ArmStats stats(4);
  std::vector<int> counts(4, 0);
  const int n = 20000;
  for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(thompson_select(stats, rng))];
  // p = 1/4, 5 sigma ~ 0.0153
  for (int c : counts) CHECK(std::abs(c - n / 4) < 350);
}

TEST_CASE("thompson is permutation-equivariant") {
  Xoshiro256 rng(7);
  const auto stats = make_stats({8, 2, 5}, {10, 10, 10});
  const auto permuted = make_stats({5, 8, 2}, {10, 10, 10});  // arms rotated by 1
  const int n = 50000;
  std::vector<double> f(3, 0.0), g(3, 0.0);
  for (int i = 0; i < n; ++i) ++f[static_cast<std::size_t>(thompson_select(stats, rng))];
  for (int i = 0; i < n; ++i) ++g[static_cast<std::size_t>(thompson_select(permuted, rng))];
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(f[static_cast<std::size_t>(i)] / n -
                   g[static_cast<std::size_t>((i + 1) % 3)] / n) < 0.015);
}

TEST_CASE("ucb1tuned plays unplayed arms first, uniformly") {
  Xoshiro256 rng(11);
  auto stats = make_stats({2, 0, 1, 0}, {3, 0, 2, 0});
  std::vector<int> counts(4, 0);
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const int arm = ucb1tuned_select(stats, stats.total_pulls(), rng);
    REQUIRE((arm == 1 || arm == 3));
    ++counts[static_cast<std::size_t>(arm)];
  }
  CHECK(std::abs(counts[1] - n / 2) < 450);

  // a single unplayed arm is forced
  stats.record(1, true);
  for (int i = 0; i < 50; ++i)
    CHECK(ucb1tuned_select(stats, stats.total_pulls(), rng) == 3);
}

TEST_CASE("ucb1tuned index favors the better-performing arm") {
  Xoshiro256 rng(13);
  const auto stats = make_stats({90, 10}, {100, 100});
  for (int i = 0; i < 100; ++i) CHECK(ucb1tuned_select(stats, 200, rng) == 0);
}

TEST_CASE("ucb1tuned index is deterministic; only ties consume randomness") {
  const auto stats = make_stats({6, 3}, {10, 9});
  Xoshiro256 a(17), b(991);
  for (int i = 0; i < 50; ++i)
    CHECK(ucb1tuned_select(stats, 19, a) == ucb1tuned_select(stats, 19, b));
}

TEST_CASE("ucb1tuned splits exact index ties uniformly") {
  Xoshiro256 rng(19);
  const auto stats = make_stats({5, 5, 5}, {10, 10, 10});
  std::vector<int> counts(3, 0);
  const int n = 30000;
  for (int i = 0; i < n; ++i)
    ++counts[static_cast<std::size_t>(ucb1tuned_select(stats, 30, rng))];
  for (int c : counts) CHECK(std::abs(c - n / 3) < 500);
}
