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

// Double oracle computation of the regret game value over an abstract
// "standard problem" oracle.
//
// The x-player picks a feasible solution, the c-player a scenario, and the
// payoff is the regret val(x, c) - val*(c). Both best responses reduce to a
// single oracle call: the x-player solves under the mean scenario of the
// opponent's mix, the c-player solves under lo + (hi - lo) * marginals and
// answers with the favoring scenario of the result. The expected regret of
// the x best response is a valid lower bound on the minmax regret at every
// iteration.

#ifndef MMR_DOUBLE_ORACLE_H_
#define MMR_DOUBLE_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mmr/core.h"
#include "mmr/game.h"

namespace mmr {

// Elements forced into (`in`) or out of (`out`) every feasible solution.
// Oracles may attach extra structure; shortest paths read `in` as an
// ordered chain leaving the source.
struct Restriction {
  std::vector<int> in;
  std::vector<int> out;

  bool empty() const { return in.empty() && out.empty(); }
};

class NoFeasibleSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleSolution {
  SolutionIndicator solution;
  double value = 0.0;
};

// Solves the deterministic ("standard") problem exactly. Implementations
// must be deterministic and safe for concurrent const use.
class StandardOracle {
 public:
  virtual ~StandardOracle() = default;

  virtual const IntervalInstance& instance() const = 0;
  std::size_t num_elements() const { return instance().size(); }

  // An optimal feasible solution for `costs` respecting `restriction`, or
  // nullopt if the restriction leaves no feasible solution.
  virtual std::optional<OracleSolution> Solve(
      std::span<const double> costs, const Restriction& restriction) const = 0;

  OracleSolution SolveOrThrow(std::span<const double> costs,
                              const Restriction& restriction = {}) const;
};

// Oracle over an explicit list of feasible solutions; ties go to the
// earliest listed solution. Handy for small abstract instances.
class EnumeratedOracle : public StandardOracle {
 public:
  EnumeratedOracle(IntervalInstance instance,
                   std::vector<SolutionIndicator> feasible);

  const IntervalInstance& instance() const override { return instance_; }
  const std::vector<SolutionIndicator>& feasible() const { return feasible_; }

  std::optional<OracleSolution> Solve(
      std::span<const double> costs,
      const Restriction& restriction) const override;

 private:
  IntervalInstance instance_;
  std::vector<SolutionIndicator> feasible_;
};

// Append-only store of generated scenarios together with their optimal
// values val*(c). val* does not depend on any restriction, so one pool can
// be shared by every restricted game of a branch and bound run. Add and
// Find are serialized internally.
class ScenarioPool {
 public:
  explicit ScenarioPool(const StandardOracle& oracle);

  ScenarioPool(const ScenarioPool&) = delete;
  ScenarioPool& operator=(const ScenarioPool&) = delete;

  // Index of an existing equal scenario, or of the newly stored one.
  std::size_t Add(const ScenarioDescriptor& descriptor);
  std::optional<std::size_t> Find(const ScenarioDescriptor& descriptor) const;

  std::size_t size() const;
  const ScenarioDescriptor& descriptor(std::size_t index) const;
  double opt_value(std::size_t index) const;

  // val(x, c_index).
  double ValOf(std::size_t index, const SolutionIndicator& x) const;
  // val(x, c_index) - val*(c_index).
  double RegretOf(std::size_t index, const SolutionIndicator& x) const;

 private:
  struct Entry {
    ScenarioDescriptor descriptor;
    double opt_value;
  };

  std::uint64_t Key(const ScenarioDescriptor& descriptor) const;
  std::optional<std::size_t> FindLocked(const ScenarioDescriptor& descriptor,
                                        std::uint64_t key) const;

  const StandardOracle& oracle_;
  // Order-independent hash of the set of uncertain elements at their lower
  // bound; equal scenarios hash equally whatever their descriptor kind.
  std::uint64_t uncertain_hash_ = 0;
  std::deque<Entry> entries_;
  std::unordered_multimap<std::uint64_t, std::size_t> index_;
  mutable std::mutex mu_;
};

// The restricted game over strategy subsets S_x and S_c, with entries
// Reg(x, c) = val(x, c) - val*(c). Scenarios live in a ScenarioPool and are
// referenced by pool index.
class RestrictedGame {
 public:
  RestrictedGame(const IntervalInstance& instance, const ScenarioPool& pool);

  bool HasSolution(const SolutionIndicator& x) const;
  bool HasScenario(std::size_t pool_index) const;

  // Duplicates are ignored; returns true if the strategy was added.
  bool AddSolution(const SolutionIndicator& x);
  bool AddScenario(std::size_t pool_index);

  const GameMatrix& matrix() const { return matrix_; }
  const std::vector<SolutionIndicator>& solutions() const { return solutions_; }
  const std::vector<std::size_t>& scenarios() const { return scenarios_; }

  // Recomputes entry (i, j) from scratch.
  double Recompute(std::size_t i, std::size_t j) const;

 private:
  const IntervalInstance& instance_;
  const ScenarioPool& pool_;
  std::vector<SolutionIndicator> solutions_;
  std::vector<std::size_t> scenarios_;
  GameMatrix matrix_;
};

struct DoubleOracleConfig {
  int max_iterations = 1000;
  // Cap on |S_x|; the scenario set keeps growing after the cap is hit.
  std::size_t max_support_x = 50;
  // Relative tolerance for declaring convergence by value.
  double tolerance = 1e-9;
  // Stop as soon as the anytime bound reaches this value.
  double stop_at = std::numeric_limits<double>::infinity();
  // Seed S_c with every scenario already in the pool.
  bool start_from_pool = false;
};

enum class DoubleOracleStop {
  kConverged,
  kIterationLimit,
  kSupportLimit,
  kReachedTarget,
};

struct DoubleOracleResult {
  // Best anytime lower bound seen (running maximum of `trace`).
  double lower_bound = -std::numeric_limits<double>::infinity();
  Equilibrium equilibrium;
  std::vector<SolutionIndicator> solutions;
  std::vector<ScenarioDescriptor> scenarios;
  bool converged = false;
  DoubleOracleStop stop = DoubleOracleStop::kIterationLimit;
  int iterations = 0;
  // Anytime lower bound of each iteration.
  std::vector<double> trace;
  // The last x best response.
  SolutionIndicator last_response;
};

struct XResponse {
  SolutionIndicator solution;
  double regret = 0.0;
};

// Best x-response to a mixed scenario under `restriction`: the oracle
// solution for the mean scenario, with its expected regret. Throws
// NoFeasibleSolution if the restriction is infeasible.
XResponse BestResponseX(const StandardOracle& oracle, const MixedScenario& mix,
                        const Restriction& restriction = {});

// Best c-response to a mixed solution: the favoring scenario of the oracle
// solution under lo + (hi - lo) * marginals.
ScenarioDescriptor BestResponseC(const StandardOracle& oracle,
                                 const MixedSolution& mix);

// Reg(x) = val(x, c^x) - val*(c^x).
double MaxRegret(const StandardOracle& oracle, const SolutionIndicator& x);

// Runs the double oracle loop from the given initial strategies. With a
// pool, generated scenarios are appended to it (and, if
// config.start_from_pool, every pooled scenario seeds S_c). If S_c would
// start empty it is seeded with the penalizing scenario of the first
// solution. Throws std::invalid_argument if init_x is empty and
// NoFeasibleSolution if the restriction is infeasible.
DoubleOracleResult RunDoubleOracle(const StandardOracle& oracle,
                                   const std::vector<SolutionIndicator>& init_x,
                                   const std::vector<ScenarioDescriptor>& init_c,
                                   const DoubleOracleConfig& config = {},
                                   const Restriction& restriction = {},
                                   ScenarioPool* pool = nullptr);

// Midpoint solution: an oracle optimum under interval midpoints.
OracleSolution MidpointSolution(const StandardOracle& oracle,
                                const Restriction& restriction = {});

// Anytime bound after at most n iterations, seeded with the midpoint
// solution and its penalizing scenario.
double LbStarN(const StandardOracle& oracle, int n,
               std::size_t max_support_x = 50);

struct MinSolResult {
  SolutionIndicator solution;
  double regret = 0.0;
};

// Minimum max-regret solution among `solutions` and `midpoint`.
MinSolResult MinSol(const StandardOracle& oracle,
                    const std::vector<SolutionIndicator>& solutions,
                    const SolutionIndicator& midpoint);

}  // namespace mmr

#endif  // MMR_DOUBLE_ORACLE_H_
