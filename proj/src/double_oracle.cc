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
#include <cmath>
#include <set>
#include <string>

namespace mmr {
namespace {

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool Satisfies(const SolutionIndicator& x, const Restriction& restriction) {
  for (int e : restriction.in) {
    if (!x.contains(e)) return false;
  }
  for (int e : restriction.out) {
    if (x.contains(e)) return false;
  }
  return true;
}

// Mean of the pooled scenarios in `columns` weighted by `probs`.
std::vector<double> MeanCosts(const IntervalInstance& instance,
                              const ScenarioPool& pool,
                              const std::vector<std::size_t>& columns,
                              std::span<const double> probs) {
  double favoring_mass = 0.0;
  double penalizing_mass = 0.0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (pool.descriptor(columns[j]).kind ==
        ScenarioDescriptor::Kind::kFavoring) {
      favoring_mass += probs[j];
    } else {
      penalizing_mass += probs[j];
    }
  }
  std::vector<double> costs(instance.size());
  for (std::size_t i = 0; i < costs.size(); ++i) {
    costs[i] = favoring_mass * instance.hi(i) + penalizing_mass * instance.lo(i);
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (probs[j] == 0.0) continue;
    const ScenarioDescriptor& d = pool.descriptor(columns[j]);
    const double sign =
        d.kind == ScenarioDescriptor::Kind::kFavoring ? -1.0 : 1.0;
    for (int i : d.solution.members()) {
      costs[i] += sign * probs[j] * instance.width(i);
    }
  }
  for (std::size_t i = 0; i < costs.size(); ++i) {
    costs[i] = std::clamp(costs[i], instance.lo(i), instance.hi(i));
  }
  return costs;
}

// lo + (hi - lo) * t, with t the marginals of the row mix.
std::vector<double> MarginalCosts(const IntervalInstance& instance,
                                  const std::vector<SolutionIndicator>& rows,
                                  std::span<const double> probs) {
  std::vector<double> t(instance.size(), 0.0);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (probs[k] == 0.0) continue;
    for (int i : rows[k].members()) t[i] += probs[k];
  }
  std::vector<double> costs(instance.size());
  for (std::size_t i = 0; i < costs.size(); ++i) {
    costs[i] = instance.lo(i) + instance.width(i) * std::clamp(t[i], 0.0, 1.0);
  }
  return costs;
}

}  // namespace

OracleSolution StandardOracle::SolveOrThrow(
    std::span<const double> costs, const Restriction& restriction) const {
  std::optional<OracleSolution> sol = Solve(costs, restriction);
  if (!sol) throw NoFeasibleSolution("restriction admits no feasible solution");
  return *std::move(sol);
}

EnumeratedOracle::EnumeratedOracle(IntervalInstance instance,
                                   std::vector<SolutionIndicator> feasible)
    : instance_(std::move(instance)), feasible_(std::move(feasible)) {
  if (feasible_.empty()) {
    throw std::invalid_argument("enumerated oracle needs a feasible solution");
  }
  for (const auto& x : feasible_) ValidateSolution(x, instance_.size());
}

std::optional<OracleSolution> EnumeratedOracle::Solve(
    std::span<const double> costs, const Restriction& restriction) const {
  if (costs.size() != instance_.size()) {
    throw std::invalid_argument("cost vector dimension mismatch");
  }
  std::optional<OracleSolution> best;
  for (const auto& x : feasible_) {
    if (!Satisfies(x, restriction)) continue;
    const double v = Val(x, costs);
    if (!best || v < best->value) best = OracleSolution{x, v};
  }
  return best;
}

ScenarioPool::ScenarioPool(const StandardOracle& oracle) : oracle_(oracle) {
  const IntervalInstance& inst = oracle_.instance();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.is_uncertain(i)) uncertain_hash_ += Mix64(i);
  }
}

std::uint64_t ScenarioPool::Key(const ScenarioDescriptor& descriptor) const {
  const IntervalInstance& inst = oracle_.instance();
  std::uint64_t members = 0;
  for (int i : descriptor.solution.members()) {
    if (inst.is_uncertain(i)) members += Mix64(static_cast<std::uint64_t>(i));
  }
  // Favoring: lo on members. Penalizing: lo on the complement.
  return descriptor.kind == ScenarioDescriptor::Kind::kFavoring
             ? members
             : uncertain_hash_ - members;
}

std::optional<std::size_t> ScenarioPool::FindLocked(
    const ScenarioDescriptor& descriptor, std::uint64_t key) const {
  auto [first, last] = index_.equal_range(key);
  for (auto it = first; it != last; ++it) {
    if (SameScenario(oracle_.instance(), entries_[it->second].descriptor,
                     descriptor)) {
      return it->second;
    }
  }
  return std::nullopt;
}

std::size_t ScenarioPool::Add(const ScenarioDescriptor& descriptor) {
  ValidateSolution(descriptor.solution, oracle_.num_elements());
  const std::uint64_t key = Key(descriptor);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto found = FindLocked(descriptor, key)) return *found;
  }
  std::vector<double> costs;
  descriptor.ExpandInto(oracle_.instance(), costs);
  const double opt = oracle_.SolveOrThrow(costs).value;
  std::lock_guard<std::mutex> lock(mu_);
  if (auto found = FindLocked(descriptor, key)) return *found;
  entries_.push_back({descriptor, opt});
  index_.emplace(key, entries_.size() - 1);
  return entries_.size() - 1;
}

std::optional<std::size_t> ScenarioPool::Find(
    const ScenarioDescriptor& descriptor) const {
  std::lock_guard<std::mutex> lock(mu_);
  return FindLocked(descriptor, Key(descriptor));
}

std::size_t ScenarioPool::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

const ScenarioDescriptor& ScenarioPool::descriptor(std::size_t index) const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.at(index).descriptor;
}

double ScenarioPool::opt_value(std::size_t index) const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.at(index).opt_value;
}

double ScenarioPool::ValOf(std::size_t index,
                          const SolutionIndicator& x) const {
  return descriptor(index).ValOf(oracle_.instance(), x);
}

double ScenarioPool::RegretOf(std::size_t index,
                              const SolutionIndicator& x) const {
  return ValOf(index, x) - opt_value(index);
}

RestrictedGame::RestrictedGame(const IntervalInstance& instance,
                               const ScenarioPool& pool)
    : instance_(instance), pool_(pool) {}

bool RestrictedGame::HasSolution(const SolutionIndicator& x) const {
  return std::find(solutions_.begin(), solutions_.end(), x) !=
         solutions_.end();
}

bool RestrictedGame::HasScenario(std::size_t pool_index) const {
  return std::find(scenarios_.begin(), scenarios_.end(), pool_index) !=
         scenarios_.end();
}

bool RestrictedGame::AddSolution(const SolutionIndicator& x) {
  if (HasSolution(x)) return false;
  ValidateSolution(x, instance_.size());
  std::vector<double> row(scenarios_.size());
  for (std::size_t j = 0; j < scenarios_.size(); ++j) {
    row[j] = pool_.RegretOf(scenarios_[j], x);
  }
  solutions_.push_back(x);
  if (!scenarios_.empty()) {
    matrix_.AppendRow(row);
  }
  return true;
}

bool RestrictedGame::AddScenario(std::size_t pool_index) {
  if (HasScenario(pool_index)) return false;
  std::vector<double> col(solutions_.size());
  for (std::size_t i = 0; i < solutions_.size(); ++i) {
    col[i] = pool_.RegretOf(pool_index, solutions_[i]);
  }
  scenarios_.push_back(pool_index);
  if (!solutions_.empty()) {
    matrix_.AppendCol(col);
  }
  return true;
}

double RestrictedGame::Recompute(std::size_t i, std::size_t j) const {
  const Scenario c = pool_.descriptor(scenarios_[j]).Expand(instance_);
  return Val(solutions_[i], c) - pool_.opt_value(scenarios_[j]);
}

XResponse BestResponseX(const StandardOracle& oracle, const MixedScenario& mix,
                        const Restriction& restriction) {
  const Scenario mean = MeanScenario(mix);
  if (mean.size() != oracle.num_elements()) {
    throw std::invalid_argument("scenario dimension mismatch");
  }
  OracleSolution best = oracle.SolveOrThrow(mean.costs, restriction);
  double regret = 0.0;
  for (std::size_t k = 0; k < mix.support.size(); ++k) {
    const double opt = oracle.SolveOrThrow(mix.support[k].costs).value;
    regret += mix.probs[k] * (Val(best.solution, mix.support[k]) - opt);
  }
  return {std::move(best.solution), regret};
}

ScenarioDescriptor BestResponseC(const StandardOracle& oracle,
                                 const MixedSolution& mix) {
  const IntervalInstance& inst = oracle.instance();
  const std::vector<double> t = Marginals(mix, inst.size());
  std::vector<double> costs(inst.size());
  for (std::size_t i = 0; i < costs.size(); ++i) {
    costs[i] = inst.lo(i) + inst.width(i) * t[i];
  }
  return ScenarioDescriptor::Favoring(oracle.SolveOrThrow(costs).solution);
}

double MaxRegret(const StandardOracle& oracle, const SolutionIndicator& x) {
  const Scenario c = PenalizingScenario(oracle.instance(), x);
  const double opt = oracle.SolveOrThrow(c.costs).value;
  return std::max(0.0, Val(x, c) - opt);
}

OracleSolution MidpointSolution(const StandardOracle& oracle,
                                const Restriction& restriction) {
  return oracle.SolveOrThrow(MidpointScenario(oracle.instance()).costs,
                             restriction);
}

DoubleOracleResult RunDoubleOracle(const StandardOracle& oracle,
                                   const std::vector<SolutionIndicator>& init_x,
                                   const std::vector<ScenarioDescriptor>& init_c,
                                   const DoubleOracleConfig& config,
                                   const Restriction& restriction,
                                   ScenarioPool* pool) {
  if (init_x.empty()) {
    throw std::invalid_argument("double oracle needs an initial solution");
  }
  if (config.max_support_x < 1 || config.max_iterations < 1) {
    throw std::invalid_argument("double oracle caps must be positive");
  }
  const IntervalInstance& inst = oracle.instance();
  std::optional<ScenarioPool> local_pool;
  if (pool == nullptr) pool = &local_pool.emplace(oracle);

  RestrictedGame game(inst, *pool);
  for (const auto& x : init_x) {
    if (game.solutions().size() >= config.max_support_x) break;
    game.AddSolution(x);
  }
  if (config.start_from_pool) {
    const std::size_t pooled = pool->size();
    for (std::size_t j = 0; j < pooled; ++j) game.AddScenario(j);
  }
  for (const auto& c : init_c) game.AddScenario(pool->Add(c));
  if (game.scenarios().empty()) {
    game.AddScenario(
        pool->Add(ScenarioDescriptor::Penalizing(game.solutions().front())));
  }

  DoubleOracleResult result;
  for (int iter = 1; iter <= config.max_iterations; ++iter) {
    result.iterations = iter;
    result.equilibrium = SolveZeroSum(game.matrix());
    const Equilibrium& eq = result.equilibrium;
    const double tol = config.tolerance * std::max(1.0, std::abs(eq.value));

    // x best response and its expected regret: the anytime lower bound.
    const std::vector<double> mean =
        MeanCosts(inst, *pool, game.scenarios(), eq.col_probs);
    OracleSolution x = oracle.SolveOrThrow(mean, restriction);
    double x_regret = 0.0;
    for (std::size_t j = 0; j < game.scenarios().size(); ++j) {
      if (eq.col_probs[j] == 0.0) continue;
      x_regret += eq.col_probs[j] * pool->RegretOf(game.scenarios()[j],
                                                   x.solution);
    }
    result.trace.push_back(x_regret);
    result.lower_bound = std::max(result.lower_bound, x_regret);
    result.last_response = x.solution;
    if (result.lower_bound >= config.stop_at) {
      result.stop = DoubleOracleStop::kReachedTarget;
      break;
    }

    // c best response. Its regret against the row mix is
    // sum_i t_i hi_i - val(z, lo + (hi - lo) t).
    const std::vector<double> marginal_costs =
        MarginalCosts(inst, game.solutions(), eq.row_probs);
    OracleSolution z = oracle.SolveOrThrow(marginal_costs);
    double c_value = -z.value;
    for (std::size_t k = 0; k < game.solutions().size(); ++k) {
      for (int i : game.solutions()[k].members()) {
        c_value += eq.row_probs[k] * inst.hi(i);
      }
    }
    const ScenarioDescriptor c_desc =
        ScenarioDescriptor::Favoring(std::move(z.solution));
    const std::optional<std::size_t> c_found = pool->Find(c_desc);
    const bool c_present = c_found && game.HasScenario(*c_found);
    const bool x_present = game.HasSolution(x.solution);

    const bool x_done = x_present || eq.value - x_regret <= tol;
    const bool c_done = c_present || c_value - eq.value <= tol;
    if (x_done && c_done) {
      result.converged = true;
      result.stop = DoubleOracleStop::kConverged;
      break;
    }

    bool grew = false;
    if (!x_present && game.solutions().size() < config.max_support_x) {
      grew |= game.AddSolution(x.solution);
    }
    if (!c_present) {
      grew |= game.AddScenario(c_found ? *c_found : pool->Add(c_desc));
    }
    if (!grew) {
      result.stop = DoubleOracleStop::kSupportLimit;
      break;
    }
    result.stop = DoubleOracleStop::kIterationLimit;
  }

  result.solutions = game.solutions();
  result.scenarios.reserve(game.scenarios().size());
  for (std::size_t j : game.scenarios()) {
    result.scenarios.push_back(pool->descriptor(j));
  }
  return result;
}

double LbStarN(const StandardOracle& oracle, int n,
               std::size_t max_support_x) {
  if (n < 1) throw std::invalid_argument("iteration count must be >= 1");
  const OracleSolution mid = MidpointSolution(oracle);
  DoubleOracleConfig config;
  config.max_iterations = n;
  config.max_support_x = max_support_x;
  return RunDoubleOracle(oracle, {mid.solution},
                         {ScenarioDescriptor::Penalizing(mid.solution)}, config)
      .lower_bound;
}

MinSolResult MinSol(const StandardOracle& oracle,
                    const std::vector<SolutionIndicator>& solutions,
                    const SolutionIndicator& midpoint) {
  MinSolResult best{midpoint, MaxRegret(oracle, midpoint)};
  for (const auto& x : solutions) {
    if (x == midpoint) continue;
    const double r = MaxRegret(oracle, x);
    if (r < best.regret) best = {x, r};
  }
  return best;
}

}  // namespace mmr
