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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mmr/bounds.h"
#include "mmr/double_oracle.h"
#include "mmr/harness.h"

namespace mmr {
namespace {

constexpr double kOrderSlack = 1e-9;
constexpr double kMatch = 1e-6;

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  // a <= b up to a slack relative to their size.
  void Le(double a, double b, const char* what) {
    const double slack =
        kOrderSlack * std::max({1.0, std::abs(a), std::abs(b)});
    if (a > b + slack) Fail(what, a, b);
  }
  void Near(double a, double b, double tol, const char* what) {
    if (!(std::abs(a - b) <= tol)) Fail(what, a, b);
  }

 private:
  void Fail(const char* what, double a, double b) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": " << a << " vs " << b;
    report_.failures.push_back(msg.str());
  }

  VerifyReport& report_;
};

}  // namespace

VerifyReport Verify(const IntervalDigraph& graph, std::size_t path_limit) {
  VerifyReport report;
  Checker check(report);
  const BruteForceResult brute = BruteForceOpt(graph, path_limit);
  report.opt = brute.opt;
  report.lb_star_brute = BruteForceLbStar(graph, path_limit);

  for (LbStrategy s : {LbStrategy::kMgd, LbStrategy::kCg, LbStrategy::kDo}) {
    const BBStats st = BbSolve(graph, s);
    const std::string name = "bb_" + std::string(StrategyName(s));
    check.Near(st.opt, brute.opt, kMatch, name.c_str());
  }

  const ShortestPathOracle oracle(graph);
  const BoundReport kz = LbKz(oracle);
  report.lb_kz = kz.value;
  report.reg_mid = kz.midpoint_regret;
  report.lb_cg = LbCg(graph).value;

  const SolutionIndicator& mid = *kz.midpoint;
  const DoubleOracleResult r = RunDoubleOracle(
      oracle, {mid}, {ScenarioDescriptor::Penalizing(mid)});
  report.lb_star = r.lower_bound;
  if (!r.converged) report.failures.push_back("double oracle did not converge");
  check.Near(r.lower_bound, report.lb_star_brute, kMatch, "lb_star");
  for (double lb : r.trace) check.Le(lb, brute.opt, "anytime bound");

  double previous = 0.0;
  for (int n : {1, 2, 3, 5, 10, 15, 20}) {
    const double lb = LbStarN(oracle, n);
    check.Le(previous, lb, "lb_star_n monotone");
    check.Le(lb, r.lower_bound, "lb_star_n below lb_star");
    previous = lb;
  }

  check.Le(report.lb_kz, report.lb_star, "kz <= lb_star");
  check.Le(report.lb_cg, report.lb_star, "cg <= lb_star");
  check.Le(report.lb_star, report.opt, "lb_star <= opt");
  check.Le(report.opt, report.reg_mid, "opt <= reg_mid");
  check.Le(report.reg_mid, 2 * report.opt, "reg_mid <= 2 opt");
  return report;
}

}  // namespace mmr
