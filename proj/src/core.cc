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

#include "mmr/core.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mmr {
namespace {

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= kExtremeTolerance;
}

template <typename Support>
void ValidateProbs(const Support& support, const std::vector<double>& probs) {
  if (support.empty()) {
    throw std::invalid_argument("mixed strategy has an empty support");
  }
  if (support.size() != probs.size()) {
    throw std::invalid_argument("support and probability sizes differ");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("negative or non-finite probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw std::invalid_argument("probabilities sum to " +
                                std::to_string(total));
  }
}

// Sum over i in a ∩ b of weight(i). Both lists are sorted.
template <typename Weight>
double IntersectionSum(const std::vector<int>& a, const std::vector<int>& b,
                       Weight weight) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      sum += weight(*ia);
      ++ia;
      ++ib;
    }
  }
  return sum;
}

}  // namespace

IntervalInstance::IntervalInstance(std::vector<double> lo,
                                   std::vector<double> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) {
    throw std::invalid_argument("lo and hi have different lengths");
  }
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!std::isfinite(lo_[i]) || !std::isfinite(hi_[i])) {
      throw std::invalid_argument("interval bound is not finite at element " +
                                  std::to_string(i));
    }
    if (lo_[i] < 0.0) {
      throw std::invalid_argument("negative interval bound at element " +
                                  std::to_string(i));
    }
    if (lo_[i] > hi_[i]) {
      throw std::invalid_argument("lo > hi at element " + std::to_string(i));
    }
    if (hi_[i] > lo_[i]) ++num_uncertain_;
  }
}

SolutionIndicator::SolutionIndicator(std::vector<int> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw std::invalid_argument("negative element index");
  }
}

bool SolutionIndicator::contains(int element) const {
  return std::binary_search(members_.begin(), members_.end(), element);
}

void ValidateMixed(const MixedSolution& mixed) {
  ValidateProbs(mixed.support, mixed.probs);
  std::vector<SolutionIndicator> sorted = mixed.support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("mixed solution repeats a support entry");
  }
}

void ValidateMixed(const MixedScenario& mixed) {
  ValidateProbs(mixed.support, mixed.probs);
  const std::size_t n = mixed.support.front().size();
  for (const Scenario& c : mixed.support) {
    if (c.size() != n) {
      throw std::invalid_argument("mixed scenario support sizes differ");
    }
  }
}

void ValidateSolution(const SolutionIndicator& x, std::size_t n) {
  if (x.min_universe() > n) {
    throw std::invalid_argument("solution references element " +
                                std::to_string(x.members().back()) +
                                " outside universe of size " +
                                std::to_string(n));
  }
}

void ValidateScenario(const IntervalInstance& instance, const Scenario& c) {
  if (c.size() != instance.size()) {
    throw std::invalid_argument("scenario dimension mismatch");
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < instance.lo(i) - kExtremeTolerance ||
        c[i] > instance.hi(i) + kExtremeTolerance) {
      throw std::invalid_argument("scenario leaves the interval box at " +
                                  std::to_string(i));
    }
  }
}

double Val(const SolutionIndicator& x, std::span<const double> costs) {
  ValidateSolution(x, costs.size());
  double sum = 0.0;
  for (int i : x.members()) sum += costs[i];
  return sum;
}

double Val(const SolutionIndicator& x, const Scenario& c) {
  return Val(x, std::span<const double>(c.costs));
}

Scenario PenalizingScenario(const IntervalInstance& instance,
                            const SolutionIndicator& x) {
  return ScenarioDescriptor::Penalizing(x).Expand(instance);
}

Scenario FavoringScenario(const IntervalInstance& instance,
                          const SolutionIndicator& y) {
  return ScenarioDescriptor::Favoring(y).Expand(instance);
}

bool IsExtreme(const IntervalInstance& instance, const Scenario& c) {
  if (c.size() != instance.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!NearlyEqual(c[i], instance.lo(i)) &&
        !NearlyEqual(c[i], instance.hi(i))) {
      return false;
    }
  }
  return true;
}

Scenario Opposite(const IntervalInstance& instance, const Scenario& c) {
  if (c.size() != instance.size()) {
    throw std::invalid_argument("scenario dimension mismatch");
  }
  Scenario out{std::vector<double>(c.size())};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (NearlyEqual(c[i], instance.hi(i))) {
      out.costs[i] = instance.lo(i);
    } else if (NearlyEqual(c[i], instance.lo(i))) {
      out.costs[i] = instance.hi(i);
    } else {
      throw std::invalid_argument("scenario is not extreme at element " +
                                  std::to_string(i));
    }
  }
  return out;
}

Scenario MidpointScenario(const IntervalInstance& instance) {
  Scenario out{std::vector<double>(instance.size())};
  for (std::size_t i = 0; i < instance.size(); ++i) {
    out.costs[i] = 0.5 * (instance.lo(i) + instance.hi(i));
  }
  return out;
}

Scenario MeanScenario(const MixedScenario& mixed) {
  ValidateMixed(mixed);
  Scenario out{std::vector<double>(mixed.support.front().size(), 0.0)};
  for (std::size_t k = 0; k < mixed.support.size(); ++k) {
    const double p = mixed.probs[k];
    const auto& costs = mixed.support[k].costs;
    for (std::size_t i = 0; i < costs.size(); ++i) out.costs[i] += p * costs[i];
  }
  return out;
}

std::vector<double> Marginals(const MixedSolution& mixed, std::size_t n) {
  ValidateMixed(mixed);
  std::vector<double> t(n, 0.0);
  for (std::size_t k = 0; k < mixed.support.size(); ++k) {
    ValidateSolution(mixed.support[k], n);
    for (int i : mixed.support[k].members()) t[i] += mixed.probs[k];
  }
  for (double& ti : t) ti = std::clamp(ti, 0.0, 1.0);
  return t;
}

double RegretAgainst(const SolutionIndicator& x, const SolutionIndicator& y,
                     const Scenario& c) {
  return Val(x, c) - Val(y, c);
}

Scenario ScenarioDescriptor::Expand(const IntervalInstance& instance) const {
  Scenario out;
  ExpandInto(instance, out.costs);
  return out;
}

void ScenarioDescriptor::ExpandInto(const IntervalInstance& instance,
                                    std::vector<double>& out) const {
  ValidateSolution(solution, instance.size());
  const bool penalizing = kind == Kind::kPenalizing;
  const auto base = penalizing ? instance.lo() : instance.hi();
  const auto flip = penalizing ? instance.hi() : instance.lo();
  out.assign(base.begin(), base.end());
  for (int i : solution.members()) out[i] = flip[i];
}

double ScenarioDescriptor::ValOf(const IntervalInstance& instance,
                                 const SolutionIndicator& x) const {
  ValidateSolution(x, instance.size());
  ValidateSolution(solution, instance.size());
  const auto width = [&](int i) { return instance.width(i); };
  double base = 0.0;
  if (kind == Kind::kPenalizing) {
    for (int i : x.members()) base += instance.lo(i);
    return base + IntersectionSum(x.members(), solution.members(), width);
  }
  for (int i : x.members()) base += instance.hi(i);
  return base - IntersectionSum(x.members(), solution.members(), width);
}

bool SameScenario(const IntervalInstance& instance,
                  const ScenarioDescriptor& a, const ScenarioDescriptor& b) {
  const auto& ma = a.solution.members();
  const auto& mb = b.solution.members();
  if (a.kind == b.kind) {
    // Equal iff the members agree on every uncertain element.
    auto ia = ma.begin();
    auto ib = mb.begin();
    while (true) {
      while (ia != ma.end() && !instance.is_uncertain(*ia)) ++ia;
      while (ib != mb.end() && !instance.is_uncertain(*ib)) ++ib;
      if (ia == ma.end() || ib == mb.end()) {
        return ia == ma.end() && ib == mb.end();
      }
      if (*ia != *ib) return false;
      ++ia;
      ++ib;
    }
  }
  // Penalizing(x) == Favoring(y) iff x and y split the uncertain elements.
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  for (int i : ma) count_a += instance.is_uncertain(i) ? 1 : 0;
  for (int i : mb) count_b += instance.is_uncertain(i) ? 1 : 0;
  if (count_a + count_b != instance.num_uncertain()) return false;
  const double shared = IntersectionSum(
      ma, mb, [&](int i) { return instance.is_uncertain(i) ? 1.0 : 0.0; });
  return shared == 0.0;
}

}  // namespace mmr
