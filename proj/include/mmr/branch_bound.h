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

// Best-first branch and bound for the minmax regret s -> t path.
//
// A node is the set of paths that start with its IN chain and avoid its OUT
// edges. Branching on the edge k that extends the chain splits the node into
// "uses k" (k appended to the chain) and "avoids k" (k added to OUT).

#ifndef MMR_BRANCH_BOUND_H_
#define MMR_BRANCH_BOUND_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mmr/core.h"
#include "mmr/double_oracle.h"
#include "mmr/shortest_path.h"

namespace mmr {

enum class LbStrategy { kMgd, kCg, kDo };

std::string_view StrategyName(LbStrategy strategy);

struct BBNode {
  PathConstraint constraint;
  double lb = 0.0;
  // Generated paths lying inside this node, passed down to warm start the
  // double oracle.
  std::vector<SolutionIndicator> inherited_x;
  int depth = 0;
};

// Children of `node` for the chain-extending edge k: (uses k, avoids k).
// Inherited paths are split by membership of k. Throws
// std::invalid_argument unless k leaves the chain's endpoint (s for an
// empty chain) and is in neither IN nor OUT.
std::pair<BBNode, BBNode> Branch(const IntervalDigraph& graph,
                                 const BBNode& node, int k);

// First edge of `path` (ordered from s) after the IN chain, or nullopt when
// the path is the chain itself (a leaf). Throws std::invalid_argument if
// the path does not start with the chain.
std::optional<int> SelectBranchEdge(const BBNode& node,
                                    std::span<const int> path);

struct BbConfig {
  std::size_t max_support_x = 50;
  int max_do_iterations = 1000;
  std::size_t node_limit = std::numeric_limits<std::size_t>::max();
  double time_limit_ms = std::numeric_limits<double>::infinity();
  // DO strategy: pass generated paths to children and seed every node game
  // with the shared scenario pool. Off means each node starts from its
  // restricted midpoint path alone.
  bool warm_start = true;
  // Record every bounded node in BBStats::nodes.
  bool keep_trace = false;
};

struct NodeBound {
  double lb = 0.0;
  // A path in the node to branch along, ordered from s.
  std::vector<int> branch_path;
  // Every path the bound computation produced; all lie inside the node.
  std::vector<SolutionIndicator> generated;
};

// Lower bound on the best max regret inside `node`. MGD and CG ignore
// `pool`; DO requires it and stops early once the anytime bound reaches
// `stop_at`. Throws NoFeasibleSolution if the node holds no path.
NodeBound NodeLowerBound(const ShortestPathOracle& oracle, const BBNode& node,
                         LbStrategy strategy, ScenarioPool* pool,
                         const BbConfig& config = {},
                         double stop_at =
                             std::numeric_limits<double>::infinity());

struct NodeRecord {
  PathConstraint constraint;
  double lb = 0.0;
  bool pruned = false;  // bounded but never branched
};

struct BBStats {
  std::size_t nodes_expanded = 0;  // nodes whose bound was computed
  double elapsed_ms = 0.0;
  double opt = 0.0;
  std::vector<int> optimal_path;  // ordered from s
  // False when a node or time limit stopped the search; opt is then only
  // the incumbent's regret.
  bool complete = true;
  std::vector<double> incumbent_trace;  // every incumbent improvement
  std::vector<NodeRecord> nodes;        // with BbConfig::keep_trace
};

// Throws std::invalid_argument if t is unreachable from s.
BBStats BbSolve(const IntervalDigraph& graph, LbStrategy strategy,
                const BbConfig& config = {});

}  // namespace mmr

#endif  // MMR_BRANCH_BOUND_H_
