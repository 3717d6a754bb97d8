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

#ifndef MMR_CORE_H_
#define MMR_CORE_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mmr {

// Absolute tolerance used to decide whether a cost sits at an interval
// endpoint.
inline constexpr double kExtremeTolerance = 1e-12;

// Tolerance on the total mass of a probability vector.
inline constexpr double kProbabilityTolerance = 1e-9;

// Interval cost data: element i costs something in [lo[i], hi[i]]. The set of
// scenarios is the box spanned by these intervals.
class IntervalInstance {
 public:
  IntervalInstance() = default;
  // Throws std::invalid_argument on size mismatch, non-finite or negative
  // values, or lo[i] > hi[i].
  IntervalInstance(std::vector<double> lo, std::vector<double> hi);

  std::size_t size() const { return lo_.size(); }
  double lo(std::size_t i) const { return lo_[i]; }
  double hi(std::size_t i) const { return hi_[i]; }
  std::span<const double> lo() const { return lo_; }
  std::span<const double> hi() const { return hi_; }
  double width(std::size_t i) const { return hi_[i] - lo_[i]; }

  // Number of elements whose interval has positive width.
  std::size_t num_uncertain() const { return num_uncertain_; }
  bool is_uncertain(std::size_t i) const { return hi_[i] > lo_[i]; }

 private:
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::size_t num_uncertain_ = 0;
};

// A cost assignment, one entry per element.
struct Scenario {
  std::vector<double> costs;

  std::size_t size() const { return costs.size(); }
  double operator[](std::size_t i) const { return costs[i]; }
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// A 0/1 solution vector stored as the sorted, duplicate-free list of member
// element indices.
class SolutionIndicator {
 public:
  SolutionIndicator() = default;
  // Sorts and deduplicates. Negative indices throw std::invalid_argument.
  explicit SolutionIndicator(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int element) const;
  // Largest member plus one, or 0 when empty.
  std::size_t min_universe() const {
    return members_.empty() ? 0 : static_cast<std::size_t>(members_.back()) + 1;
  }

  friend bool operator==(const SolutionIndicator&,
                         const SolutionIndicator&) = default;
  friend auto operator<=>(const SolutionIndicator&,
                          const SolutionIndicator&) = default;

 private:
  std::vector<int> members_;
};

// A probability distribution over finitely many solutions.
struct MixedSolution {
  std::vector<SolutionIndicator> support;
  std::vector<double> probs;
};

// A probability distribution over finitely many scenarios.
struct MixedScenario {
  std::vector<Scenario> support;
  std::vector<double> probs;
};

// Throws std::invalid_argument unless probs is a distribution matching the
// support size (sum 1 within kProbabilityTolerance, entries >= 0) and the
// support has no repeated entries.
void ValidateMixed(const MixedSolution& mixed);
void ValidateMixed(const MixedScenario& mixed);

// Throws std::invalid_argument if a member index is out of range for n.
void ValidateSolution(const SolutionIndicator& x, std::size_t n);
// Throws std::invalid_argument if c is not a point of the instance box.
void ValidateScenario(const IntervalInstance& instance, const Scenario& c);

// Sum of c over the members of x.
double Val(const SolutionIndicator& x, const Scenario& c);
double Val(const SolutionIndicator& x, std::span<const double> costs);

// hi on members of x, lo elsewhere: the worst case for x.
Scenario PenalizingScenario(const IntervalInstance& instance,
                            const SolutionIndicator& x);

// lo on members of y, hi elsewhere: the most favorable case for y.
Scenario FavoringScenario(const IntervalInstance& instance,
                          const SolutionIndicator& y);

// True if every coordinate lies within kExtremeTolerance of lo or hi.
bool IsExtreme(const IntervalInstance& instance, const Scenario& c);

// Flips each coordinate of an extreme scenario to the other endpoint.
// Throws std::invalid_argument if c is not extreme.
Scenario Opposite(const IntervalInstance& instance, const Scenario& c);

Scenario MidpointScenario(const IntervalInstance& instance);

// Probability-weighted average of the support scenarios.
Scenario MeanScenario(const MixedScenario& mixed);

// t[i] = probability that element i belongs to the drawn solution.
std::vector<double> Marginals(const MixedSolution& mixed, std::size_t n);

// val(x, c) - val(y, c).
double RegretAgainst(const SolutionIndicator& x, const SolutionIndicator& y,
                     const Scenario& c);

// Compact handle for a scenario generated by the engine: either the
// penalizing scenario of `solution` or the favoring scenario of `solution`.
struct ScenarioDescriptor {
  enum class Kind { kPenalizing, kFavoring };

  SolutionIndicator solution;
  Kind kind = Kind::kFavoring;

  static ScenarioDescriptor Penalizing(SolutionIndicator x) {
    return {std::move(x), Kind::kPenalizing};
  }
  static ScenarioDescriptor Favoring(SolutionIndicator y) {
    return {std::move(y), Kind::kFavoring};
  }

  Scenario Expand(const IntervalInstance& instance) const;
  // Writes the dense costs into `out` (resized to the instance size).
  void ExpandInto(const IntervalInstance& instance,
                  std::vector<double>& out) const;
  // val(x, expanded scenario) without materializing the dense costs.
  double ValOf(const IntervalInstance& instance,
               const SolutionIndicator& x) const;
};

// True if both descriptors expand to the same scenario. Elements with
// zero-width intervals are ignored, so e.g. the penalizing scenario of x and
// the favoring scenario of y coincide when x and y partition the uncertain
// elements.
bool SameScenario(const IntervalInstance& instance,
                  const ScenarioDescriptor& a, const ScenarioDescriptor& b);

}  // namespace mmr

#endif  // MMR_CORE_H_
