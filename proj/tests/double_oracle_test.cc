// Copyright 2026 The mmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmr/double_oracle.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mmr/shortest_path.h"

namespace mmr {
namespace {

using ::testing::ElementsAre;

EnumeratedOracle TwoChoice() {
  return EnumeratedOracle(IntervalInstance({5, 7}, {10, 12}),
                          {SolutionIndicator({0}), SolutionIndicator({1})});
}

// n = 5, every solution picks exactly two elements.
EnumeratedOracle PickTwo() {
  std::vector<SolutionIndicator> feasible;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) feasible.emplace_back(std::vector<int>{i, j});
  }
  return EnumeratedOracle(IntervalInstance({3, 1, 1, 3, 0}, {4, 5, 2, 3, 6}),
                          feasible);
}

TEST(EnumeratedOracleTest, SolvesWithRestrictions) {
  const EnumeratedOracle oracle = PickTwo();
  const std::vector<double> c = {3, 5, 2, 3, 0};
  OracleSolution best = oracle.SolveOrThrow(c);
  EXPECT_THAT(best.solution.members(), ElementsAre(2, 4));
  EXPECT_EQ(best.value, 2.0);
  best = oracle.SolveOrThrow(c, {{0}, {4}});
  EXPECT_THAT(best.solution.members(), ElementsAre(0, 2));
  EXPECT_FALSE(oracle.Solve(c, {{0, 1, 2}, {}}));
}

TEST(MaxRegretTest, Examples) {
  const EnumeratedOracle two = TwoChoice();
  EXPECT_EQ(MaxRegret(two, SolutionIndicator({0})), 3.0);
  EXPECT_EQ(MaxRegret(two, SolutionIndicator({1})), 7.0);
  const IntervalDigraph g = testing::Figure1();
  const ShortestPathOracle sp(g);
  EXPECT_EQ(MaxRegret(sp, SolutionIndicator({0, 2, 5, 7})), 4.0);
  // Weak-optimal under its own worst case.
  const IntervalDigraph line(3, {{0, 1, 1, 5}, {1, 2, 0, 9}}, 0, 2);
  EXPECT_EQ(MaxRegret(ShortestPathOracle(line), SolutionIndicator({0, 1})),
            0.0);
}

TEST(BestResponseXTest, TwoChoiceMixes) {
  const EnumeratedOracle oracle = TwoChoice();
  const Scenario a{{5, 12}};
  const Scenario b{{10, 7}};
  XResponse r = BestResponseX(oracle, MixedScenario{{a, b}, {0.3, 0.7}});
  EXPECT_NEAR(r.regret, 2.1, 1e-12);
  r = BestResponseX(oracle, MixedScenario{{a, b}, {0.5, 0.5}});
  EXPECT_THAT(r.solution.members(), ElementsAre(0));
  EXPECT_NEAR(r.regret, 1.5, 1e-12);
  r = BestResponseX(oracle, MixedScenario{{b}, {1.0}});
  EXPECT_EQ(r.regret, 0.0);
  EXPECT_THROW(BestResponseX(oracle, MixedScenario{{a}, {1.0}}, {{0, 1}, {}}),
               NoFeasibleSolution);
}

TEST(BestResponseCTest, Examples) {
  const EnumeratedOracle pick = PickTwo();
  ScenarioDescriptor d =
      BestResponseC(pick, MixedSolution{{SolutionIndicator({1, 2})}, {1.0}});
  EXPECT_THAT(d.solution.members(), ElementsAre(2, 4));
  EXPECT_EQ(d.kind, ScenarioDescriptor::Kind::kFavoring);
  EXPECT_THAT(d.Expand(pick.instance()).costs, ElementsAre(4, 5, 1, 3, 0));

  const EnumeratedOracle two = TwoChoice();
  d = BestResponseC(
      two, MixedSolution{{SolutionIndicator({0}), SolutionIndicator({1})},
                         {0.7, 0.3}});
  EXPECT_THAT(d.Expand(two.instance()).costs, ElementsAre(5, 12));
}

TEST(ScenarioPoolTest, DeduplicatesSemantically) {
  const EnumeratedOracle oracle = TwoChoice();
  ScenarioPool pool(oracle);
  const std::size_t a = pool.Add(ScenarioDescriptor::Penalizing(SolutionIndicator({0})));
  const std::size_t b = pool.Add(ScenarioDescriptor::Favoring(SolutionIndicator({1})));
  const std::size_t c = pool.Add(ScenarioDescriptor::Favoring(SolutionIndicator({0})));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(pool.size(), 2u);
  EXPECT_EQ(pool.opt_value(a), 7.0);
  EXPECT_EQ(pool.opt_value(c), 5.0);
  EXPECT_EQ(pool.RegretOf(c, SolutionIndicator({1})), 7.0);
  EXPECT_FALSE(pool.Find(ScenarioDescriptor::Penalizing(SolutionIndicator({0, 1}))));
}

TEST(RestrictedGameTest, EntriesMatchRecomputation) {
  const IntervalDigraph g = testing::Figure1();
  const ShortestPathOracle oracle(g);
  ScenarioPool pool(oracle);
  RestrictedGame game(g.instance(), pool);
  const auto paths = testing::AllPaths(g);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    if (k % 2 == 0) game.AddSolution(SolutionIndicator(paths[k]));
    game.AddScenario(pool.Add(ScenarioDescriptor::Favoring(SolutionIndicator(paths[k]))));
    if (k % 2 == 1) game.AddSolution(SolutionIndicator(paths[k]));
  }
  EXPECT_FALSE(game.AddSolution(SolutionIndicator(paths[0])));
  ASSERT_EQ(game.matrix().rows(), paths.size());
  ASSERT_EQ(game.matrix().cols(), paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.size(); ++j) {
      EXPECT_NEAR(game.matrix()(i, j), game.Recompute(i, j), 1e-9);
    }
  }
}

TEST(RunDoubleOracleTest, TwoChoiceConvergesToKnownValue) {
  for (bool as_graph : {false, true}) {
    const IntervalDigraph g = testing::TwoParallel();
    const ShortestPathOracle sp(g);
    const EnumeratedOracle en = TwoChoice();
    const StandardOracle& oracle =
        as_graph ? static_cast<const StandardOracle&>(sp) : en;
    const OracleSolution mid = MidpointSolution(oracle);
    EXPECT_THAT(mid.solution.members(), ElementsAre(0));
    const DoubleOracleResult r =
        RunDoubleOracle(oracle, {mid.solution},
                        {ScenarioDescriptor::Penalizing(mid.solution)});
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.stop, DoubleOracleStop::kConverged);
    EXPECT_NEAR(r.lower_bound, 2.1, 1e-9);
    EXPECT_NEAR(r.equilibrium.value, 2.1, 1e-9);
    EXPECT_EQ(r.iterations, 3);
    EXPECT_THAT(r.trace, ElementsAre(0.0, 0.0, ::testing::DoubleNear(2.1, 1e-9)));
    EXPECT_EQ(r.solutions.size(), 2u);
    EXPECT_EQ(r.scenarios.size(), 2u);
    EXPECT_EQ(LbStarN(oracle, 1), 0.0);
    EXPECT_EQ(LbStarN(oracle, 2), 0.0);
    EXPECT_NEAR(LbStarN(oracle, 3), 2.1, 1e-9);
    EXPECT_NEAR(LbStarN(oracle, 50), 2.1, 1e-9);
  }
}

TEST(RunDoubleOracleTest, ZeroWidthConvergesImmediately) {
  const IntervalDigraph g(3, {{0, 1, 2, 2}, {1, 2, 3, 3}, {0, 2, 6, 6}}, 0, 2);
  const ShortestPathOracle oracle(g);
  const OracleSolution mid = MidpointSolution(oracle);
  const DoubleOracleResult r = RunDoubleOracle(
      oracle, {mid.solution}, {ScenarioDescriptor::Penalizing(mid.solution)});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 2);
  EXPECT_EQ(r.lower_bound, 0.0);
}

TEST(RunDoubleOracleTest, Figure1MatchesFullGame) {
  const IntervalDigraph g = testing::Figure1();
  const ShortestPathOracle oracle(g);
  const OracleSolution mid = MidpointSolution(oracle);
  EXPECT_EQ(mid.value, 8.0);
  const DoubleOracleResult r = RunDoubleOracle(
      oracle, {mid.solution}, {ScenarioDescriptor::Penalizing(mid.solution)});
  EXPECT_TRUE(r.converged);
  // Frozen from solving the full 5 x 5 path-by-favoring-scenario game.
  EXPECT_NEAR(r.lower_bound, 2.5, 1e-9);
  EXPECT_NEAR(r.equilibrium.value, 2.5, 1e-9);
}

TEST(RunDoubleOracleTest, RejectsBadInput) {
  const EnumeratedOracle oracle = TwoChoice();
  EXPECT_THROW(RunDoubleOracle(oracle, {}, {}), std::invalid_argument);
  DoubleOracleConfig config;
  config.max_support_x = 0;
  EXPECT_THROW(RunDoubleOracle(oracle, {SolutionIndicator({0})}, {}, config),
               std::invalid_argument);
  EXPECT_THROW(RunDoubleOracle(oracle, {SolutionIndicator({0})}, {}, {},
                               {{0, 1}, {}}),
               NoFeasibleSolution);
}

TEST(RunDoubleOracleTest, StopsAtTarget) {
  const EnumeratedOracle oracle = TwoChoice();
  DoubleOracleConfig config;
  config.stop_at = 1.0;
  const DoubleOracleResult r =
      RunDoubleOracle(oracle, {SolutionIndicator({0})}, {}, config);
  EXPECT_EQ(r.stop, DoubleOracleStop::kReachedTarget);
  EXPECT_FALSE(r.converged);
  EXPECT_NEAR(r.lower_bound, 2.1, 1e-9);
}

TEST(MinSolTest, Examples) {
  const EnumeratedOracle two = TwoChoice();
  MinSolResult m = MinSol(two, {SolutionIndicator({1})}, SolutionIndicator({0}));
  EXPECT_THAT(m.solution.members(), ElementsAre(0));
  EXPECT_EQ(m.regret, 3.0);
  m = MinSol(two, {}, SolutionIndicator({1}));
  EXPECT_EQ(m.regret, 7.0);

  const IntervalDigraph g = testing::Figure1();
  const ShortestPathOracle sp(g);
  std::vector<SolutionIndicator> all;
  for (const auto& p : testing::AllPaths(g)) all.emplace_back(p);
  m = MinSol(sp, all, MidpointSolution(sp).solution);
  EXPECT_THAT(m.solution.members(), ElementsAre(0, 2, 5, 7));
  EXPECT_EQ(m.regret, 4.0);
}

struct SmallInstance {
  IntervalDigraph graph;
  std::vector<std::vector<int>> paths;
};

std::optional<SmallInstance> RandomSmall(std::uint64_t seed) {
  const int n = 3 + seed % 5;
  IntervalDigraph g(n, testing::RandomEdges(n, 0.5, seed), 0, n - 1);
  auto paths = testing::AllPaths(g);
  if (paths.empty()) return std::nullopt;
  return SmallInstance{std::move(g), std::move(paths)};
}

TEST(RunDoubleOracleTest, RandomInstancesMatchFullGameAndStaySound) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 150; ++seed) {
    auto inst = RandomSmall(seed);
    if (!inst) continue;
    ++checked;
    const IntervalDigraph& g = inst->graph;
    const ShortestPathOracle oracle(g);
    double opt = 1e300;
    for (const auto& p : inst->paths) {
      opt = std::min(opt, testing::EnumeratedRegret(g, inst->paths, p));
    }
    // Full game: every path against every favoring scenario.
    GameMatrix full(inst->paths.size(), inst->paths.size());
    for (std::size_t j = 0; j < inst->paths.size(); ++j) {
      std::vector<double> c(g.edge_count());
      for (int e = 0; e < g.edge_count(); ++e) c[e] = g.edge(e).hi;
      for (int e : inst->paths[j]) c[e] = g.edge(e).lo;
      const double best = testing::MinOverPaths(inst->paths, c);
      for (std::size_t i = 0; i < inst->paths.size(); ++i) {
        full(i, j) = testing::PathValue(inst->paths[i], c) - best;
      }
    }
    const double full_value = SolveZeroSum(full).value;

    const OracleSolution mid = MidpointSolution(oracle);
    const DoubleOracleResult r = RunDoubleOracle(
        oracle, {mid.solution}, {ScenarioDescriptor::Penalizing(mid.solution)});
    ASSERT_TRUE(r.converged) << "seed " << seed;
    ASSERT_NEAR(r.lower_bound, full_value, 1e-6) << "seed " << seed;
    ASSERT_NEAR(r.lower_bound, r.equilibrium.value, 1e-7);
    ASSERT_EQ(r.lower_bound, *std::max_element(r.trace.begin(), r.trace.end()));
    for (double lb : r.trace) ASSERT_LE(lb, opt + 1e-9);
    ASSERT_EQ(std::set<SolutionIndicator>(r.solutions.begin(), r.solutions.end())
                  .size(),
              r.solutions.size());

    // Capped runs stay sound.
    DoubleOracleConfig capped;
    capped.max_support_x = 1;
    const DoubleOracleResult c = RunDoubleOracle(
        oracle, {mid.solution}, {ScenarioDescriptor::Penalizing(mid.solution)},
        capped);
    ASSERT_LE(c.lower_bound, opt + 1e-9);
    ASSERT_LE(c.solutions.size(), 1u);
  }
}

}  // namespace
}  // namespace mmr
