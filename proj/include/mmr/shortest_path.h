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

// Robust shortest path: interval digraphs, Dijkstra variants, IN/OUT
// constrained searches and the two-unit flow used by the centered-pair
// bound.

#ifndef MMR_SHORTEST_PATH_H_
#define MMR_SHORTEST_PATH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mmr/core.h"
#include "mmr/double_oracle.h"

namespace mmr {

struct Edge {
  int tail = 0;
  int head = 0;
  double lo = 0.0;
  double hi = 0.0;
};

// Directed graph with an interval cost per edge. Elements of the derived
// IntervalInstance are the edges in insertion order. Immutable once built.
class IntervalDigraph {
 public:
  // Throws std::invalid_argument on bad endpoints, intervals or s == t.
  IntervalDigraph(int node_count, std::vector<Edge> edges, int s, int t);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int s() const { return s_; }
  int t() const { return t_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const IntervalInstance& instance() const { return instance_; }

  // Edge ids leaving / entering node v.
  std::span<const int> out_edges(int v) const {
    return {out_ids_.data() + out_start_[v], out_ids_.data() + out_start_[v + 1]};
  }
  std::span<const int> in_edges(int v) const {
    return {in_ids_.data() + in_start_[v], in_ids_.data() + in_start_[v + 1]};
  }

 private:
  int node_count_;
  std::vector<Edge> edges_;
  int s_;
  int t_;
  IntervalInstance instance_;
  std::vector<int> out_start_;
  std::vector<int> out_ids_;
  std::vector<int> in_start_;
  std::vector<int> in_ids_;
};

// An IN chain leaving s plus a set of excluded edges.
using PathConstraint = Restriction;

struct PathResult {
  std::vector<int> edges;  // in traversal order
  double value = 0.0;

  SolutionIndicator solution() const { return SolutionIndicator(edges); }
};

// True if `edges` is a simple path from `from` to `to` (empty iff from == to).
bool IsSimplePath(const IntervalDigraph& graph, std::span<const int> edges,
                  int from, int to);

// Minimum-cost from -> to path; nullopt if `to` is unreachable. Among
// equal-cost labels the smaller predecessor edge id wins.
std::optional<PathResult> Dijkstra(const IntervalDigraph& graph,
                                   std::span<const double> costs, int from,
                                   int to);
std::optional<PathResult> BidirectionalDijkstra(const IntervalDigraph& graph,
                                                std::span<const double> costs,
                                                int from, int to);

// Throws std::invalid_argument unless the IN chain is a simple path leaving
// s and disjoint from the OUT set.
void ValidateConstraint(const IntervalDigraph& graph,
                        const PathConstraint& constraint);

// Best s -> t path that starts with the IN chain and avoids the OUT set.
// Interior chain nodes are not revisited, so the result is simple.
std::optional<PathResult> ConstrainedSp(const IntervalDigraph& graph,
                                        std::span<const double> costs,
                                        const PathConstraint& constraint,
                                        bool bidirectional = false);

// Cheapest pair of s -> t paths when the first unit through an edge pays
// `first` and the second pays `second` (first <= second). IN chain edges
// pay hi for both units and OUT edges lo for both; the paths themselves are
// unrestricted. nullopt if t is unreachable.
std::optional<double> TwoUnitMinFlow(const IntervalDigraph& graph,
                                     std::span<const double> lo,
                                     std::span<const double> hi,
                                     const PathConstraint& constraint = {});

// StandardOracle over s -> t paths: Solve() is ConstrainedSp with the
// restriction read as a path constraint.
class ShortestPathOracle : public StandardOracle {
 public:
  // Throws std::invalid_argument if t is unreachable from s.
  explicit ShortestPathOracle(const IntervalDigraph& graph,
                              bool bidirectional = true);

  const IntervalInstance& instance() const override {
    return graph_.instance();
  }
  const IntervalDigraph& graph() const { return graph_; }

  std::optional<OracleSolution> Solve(
      std::span<const double> costs,
      const Restriction& restriction) const override;

  // Same search, returning the ordered edge list.
  std::optional<PathResult> SolvePath(std::span<const double> costs,
                                      const PathConstraint& constraint) const;

 private:
  const IntervalDigraph& graph_;
  bool bidirectional_;
};

// Orders the edges of an s -> t path solution from s to t.
std::vector<int> OrderPath(const IntervalDigraph& graph,
                           const SolutionIndicator& path);

}  // namespace mmr

#endif  // MMR_SHORTEST_PATH_H_
