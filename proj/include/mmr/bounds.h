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

// Baseline lower bounds on the minmax regret and gap ratios.
//
//   LB_KZ   half the max regret of the midpoint solution.
//   LB_CG   best centered pair of extreme scenarios, for shortest paths.
//   LB_MGD  the classical node bound for IN/OUT restricted path sets.

#ifndef MMR_BOUNDS_H_
#define MMR_BOUNDS_H_

#include <optional>
#include <string>
#include <vector>

#include "mmr/core.h"
#include "mmr/double_oracle.h"
#include "mmr/shortest_path.h"

namespace mmr {

struct BoundReport {
  std::string name;
  double value = 0.0;
  double elapsed_ms = 0.0;
  // Set by LbKz.
  std::optional<SolutionIndicator> midpoint;
  double midpoint_regret = 0.0;
  // Set by LbCg (constrained midpoint path) and LbMgd (constrained path
  // under hi costs); ordered from s.
  std::vector<int> witness_path;
};

// Reg(x_mid) / 2.
BoundReport LbKz(const StandardOracle& oracle);

// sum_{IN} (hi - mid) + SP(mid, IN, OUT) - F / 2, where F is the two-unit
// flow value. Throws NoFeasibleSolution if the constraint admits no path.
BoundReport LbCg(const IntervalDigraph& graph,
                 const PathConstraint& constraint = {});

// SP(all hi, IN, OUT) - SP(hi except OUT at lo). Throws NoFeasibleSolution
// if the constraint admits no path.
BoundReport LbMgd(const IntervalDigraph& graph,
                  const PathConstraint& constraint = {});

struct Gaps {
  double medsol = 0.0;
  double minsol = 0.0;
  std::optional<double> opt;
};

// Ratios numerator / lb. A zero bound gives 1 for a zero numerator and +inf
// otherwise. Values within 1e-9 of zero count as zero; clearly negative
// inputs throw std::invalid_argument.
Gaps GapMetrics(double lb, double reg_mid, double reg_minsol,
                std::optional<double> opt = std::nullopt);

}  // namespace mmr

#endif  // MMR_BOUNDS_H_
