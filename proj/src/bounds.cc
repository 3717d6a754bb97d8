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

#include "mmr/bounds.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mmr {
namespace {

constexpr double kZero = 1e-9;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

double Ratio(double numerator, double lb) {
  if (lb == 0.0) {
    return numerator == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return numerator / lb;
}

double CleanNonnegative(double v, const char* what) {
  if (v < -kZero) {
    throw std::invalid_argument(std::string("negative ") + what);
  }
  return v <= kZero ? 0.0 : v;
}

}  // namespace

BoundReport LbKz(const StandardOracle& oracle) {
  Stopwatch clock;
  BoundReport report;
  report.name = "kz";
  const OracleSolution mid = MidpointSolution(oracle);
  report.midpoint_regret = MaxRegret(oracle, mid.solution);
  report.value = report.midpoint_regret / 2.0;
  report.midpoint = mid.solution;
  report.elapsed_ms = clock.ms();
  return report;
}

BoundReport LbCg(const IntervalDigraph& graph,
                 const PathConstraint& constraint) {
  Stopwatch clock;
  const IntervalInstance& inst = graph.instance();
  const std::vector<double> mid = MidpointScenario(inst).costs;
  std::optional<PathResult> path = ConstrainedSp(graph, mid, constraint, true);
  if (!path) throw NoFeasibleSolution("no path satisfies the node constraint");
  double value = path->value;
  for (int e : constraint.in) value += inst.hi(e) - mid[e];
  // The constrained path exists, so t is reachable and the flow is finite.
  value -= *TwoUnitMinFlow(graph, inst.lo(), inst.hi(), constraint) / 2.0;

  BoundReport report;
  report.name = "cg";
  report.value = std::max(0.0, value);
  report.witness_path = std::move(path->edges);
  report.elapsed_ms = clock.ms();
  return report;
}

BoundReport LbMgd(const IntervalDigraph& graph,
                  const PathConstraint& constraint) {
  Stopwatch clock;
  const IntervalInstance& inst = graph.instance();
  std::vector<double> costs(inst.hi().begin(), inst.hi().end());
  std::optional<PathResult> restricted =
      ConstrainedSp(graph, costs, constraint, true);
  if (!restricted) {
    throw NoFeasibleSolution("no path satisfies the node constraint");
  }
  for (int e : constraint.out) costs[e] = inst.lo(e);
  const double relaxed =
      BidirectionalDijkstra(graph, costs, graph.s(), graph.t())->value;

  BoundReport report;
  report.name = "mgd";
  report.value = std::max(0.0, restricted->value - relaxed);
  report.witness_path = std::move(restricted->edges);
  report.elapsed_ms = clock.ms();
  return report;
}

Gaps GapMetrics(double lb, double reg_mid, double reg_minsol,
                std::optional<double> opt) {
  lb = CleanNonnegative(lb, "lower bound");
  reg_mid = CleanNonnegative(reg_mid, "midpoint regret");
  reg_minsol = CleanNonnegative(reg_minsol, "minSol regret");
  Gaps gaps;
  gaps.medsol = Ratio(reg_mid, lb);
  gaps.minsol = Ratio(reg_minsol, lb);
  if (opt) gaps.opt = Ratio(CleanNonnegative(*opt, "optimum"), lb);
  return gaps;
}

}  // namespace mmr
