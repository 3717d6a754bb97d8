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

#include "mmr/branch_bound.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <stdexcept>

#include "mmr/bounds.h"

namespace mmr {
namespace {

constexpr double kPruneSlack = 1e-9;

bool Contains(const std::vector<int>& v, int e) {
  return std::find(v.begin(), v.end(), e) != v.end();
}

int ChainEnd(const IntervalDigraph& graph, const PathConstraint& c) {
  return c.in.empty() ? graph.s() : graph.edge(c.in.back()).head;
}

class Incumbent {
 public:
  explicit Incumbent(const StandardOracle& oracle) : oracle_(oracle) {}

  void Offer(const SolutionIndicator& x) {
    auto [it, fresh] = regrets_.try_emplace(x, 0.0);
    if (!fresh) return;
    it->second = MaxRegret(oracle_, x);
    if (!best_ || it->second < regret_) {
      best_ = x;
      regret_ = it->second;
      trace_.push_back(regret_);
    }
  }

  double regret() const { return regret_; }
  const SolutionIndicator& best() const { return *best_; }
  const std::vector<double>& trace() const { return trace_; }

 private:
  const StandardOracle& oracle_;
  std::map<SolutionIndicator, double> regrets_;
  std::optional<SolutionIndicator> best_;
  double regret_ = std::numeric_limits<double>::infinity();
  std::vector<double> trace_;
};

struct Open {
  BBNode node;
  std::vector<int> branch_path;
  std::size_t seq = 0;
  std::size_t record = 0;
};

// Smallest lb first, then deeper, then older.
struct Later {
  bool operator()(const Open& a, const Open& b) const {
    if (a.node.lb != b.node.lb) return a.node.lb > b.node.lb;
    if (a.node.depth != b.node.depth) return a.node.depth < b.node.depth;
    return a.seq > b.seq;
  }
};

}  // namespace

std::string_view StrategyName(LbStrategy strategy) {
  switch (strategy) {
    case LbStrategy::kMgd:
      return "mgd";
    case LbStrategy::kCg:
      return "cg";
    case LbStrategy::kDo:
      return "do";
  }
  return "?";
}

std::pair<BBNode, BBNode> Branch(const IntervalDigraph& graph,
                                 const BBNode& node, int k) {
  const PathConstraint& c = node.constraint;
  if (k < 0 || k >= graph.edge_count()) {
    throw std::invalid_argument("branch edge out of range");
  }
  if (Contains(c.in, k) || Contains(c.out, k)) {
    throw std::invalid_argument("branch edge already fixed");
  }
  const Edge& edge = graph.edge(k);
  if (edge.tail != ChainEnd(graph, c)) {
    throw std::invalid_argument("branch edge does not extend the IN chain");
  }
  // The extended chain must stay simple.
  if (edge.head == graph.s()) {
    throw std::invalid_argument("branch edge closes a cycle on the IN chain");
  }
  for (int e : c.in) {
    if (graph.edge(e).head == edge.head) {
      throw std::invalid_argument("branch edge closes a cycle on the IN chain");
    }
  }

  BBNode with_k{c, node.lb, {}, node.depth + 1};
  BBNode without_k{c, node.lb, {}, node.depth + 1};
  with_k.constraint.in.push_back(k);
  without_k.constraint.out.push_back(k);
  for (const auto& x : node.inherited_x) {
    (x.contains(k) ? with_k : without_k).inherited_x.push_back(x);
  }
  return {std::move(with_k), std::move(without_k)};
}

std::optional<int> SelectBranchEdge(const BBNode& node,
                                    std::span<const int> path) {
  const std::vector<int>& in = node.constraint.in;
  if (path.size() < in.size() ||
      !std::equal(in.begin(), in.end(), path.begin())) {
    throw std::invalid_argument("path does not start with the IN chain");
  }
  if (path.size() == in.size()) return std::nullopt;
  return path[in.size()];
}

NodeBound NodeLowerBound(const ShortestPathOracle& oracle, const BBNode& node,
                         LbStrategy strategy, ScenarioPool* pool,
                         const BbConfig& config, double stop_at) {
  const IntervalDigraph& graph = oracle.graph();
  NodeBound bound;
  switch (strategy) {
    case LbStrategy::kMgd:
    case LbStrategy::kCg: {
      BoundReport r = strategy == LbStrategy::kMgd
                          ? LbMgd(graph, node.constraint)
                          : LbCg(graph, node.constraint);
      bound.lb = r.value;
      bound.generated.emplace_back(r.witness_path);
      bound.branch_path = std::move(r.witness_path);
      return bound;
    }
    case LbStrategy::kDo:
      break;
  }

  std::vector<SolutionIndicator> init_x;
  if (config.warm_start) init_x = node.inherited_x;
  if (init_x.empty()) {
    init_x.push_back(MidpointSolution(oracle, node.constraint).solution);
  }
  DoubleOracleConfig dc;
  dc.max_iterations = config.max_do_iterations;
  dc.max_support_x = config.max_support_x;
  dc.stop_at = stop_at;
  dc.start_from_pool = config.warm_start;
  DoubleOracleResult r =
      RunDoubleOracle(oracle, init_x, {}, dc, node.constraint, pool);
  bound.lb = std::max(0.0, r.lower_bound);
  bound.branch_path = OrderPath(graph, r.last_response);
  bound.generated = std::move(r.solutions);
  if (std::find(bound.generated.begin(), bound.generated.end(),
                r.last_response) == bound.generated.end()) {
    bound.generated.push_back(r.last_response);
  }
  return bound;
}

BBStats BbSolve(const IntervalDigraph& graph, LbStrategy strategy,
                const BbConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  };

  const ShortestPathOracle oracle(graph);
  ScenarioPool pool(oracle);
  Incumbent incumbent(oracle);
  incumbent.Offer(MidpointSolution(oracle).solution);

  BBStats stats;
  std::priority_queue<Open, std::vector<Open>, Later> open;
  std::vector<bool> branched;
  std::size_t seq = 0;

  // Bounds `node` and queues it unless it is empty or already dominated.
  auto evaluate = [&](BBNode node) {
    NodeBound b;
    try {
      b = NodeLowerBound(oracle, node, strategy, &pool, config,
                         incumbent.regret() - kPruneSlack);
    } catch (const NoFeasibleSolution&) {
      return;
    }
    ++stats.nodes_expanded;
    for (const auto& x : b.generated) incumbent.Offer(x);
    node.lb = b.lb;
    if (strategy == LbStrategy::kDo && config.warm_start) {
      for (auto& x : b.generated) {
        if (std::find(node.inherited_x.begin(), node.inherited_x.end(), x) ==
            node.inherited_x.end()) {
          node.inherited_x.push_back(std::move(x));
        }
      }
    } else {
      node.inherited_x.clear();
    }
    std::size_t record = branched.size();
    branched.push_back(false);
    if (config.keep_trace) stats.nodes.push_back({node.constraint, node.lb});
    if (node.lb >= incumbent.regret() - kPruneSlack) return;
    open.push({std::move(node), std::move(b.branch_path), seq++, record});
  };

  evaluate(BBNode{});
  while (!open.empty()) {
    Open top = open.top();
    open.pop();
    if (top.node.lb >= incumbent.regret() - kPruneSlack) continue;
    const std::optional<int> k = SelectBranchEdge(top.node, top.branch_path);
    // A leaf holds the single path already offered to the incumbent.
    if (!k) continue;
    if (stats.nodes_expanded >= config.node_limit ||
        elapsed_ms() >= config.time_limit_ms) {
      stats.complete = false;
      break;
    }
    branched[top.record] = true;
    auto [with_k, without_k] = Branch(graph, top.node, *k);
    evaluate(std::move(with_k));
    evaluate(std::move(without_k));
  }

  if (config.keep_trace) {
    for (std::size_t i = 0; i < stats.nodes.size(); ++i) {
      stats.nodes[i].pruned = !branched[i];
    }
  }
  stats.opt = incumbent.regret();
  stats.optimal_path = OrderPath(graph, incumbent.best());
  stats.incumbent_trace = incumbent.trace();
  stats.elapsed_ms = elapsed_ms();
  return stats;
}

}  // namespace mmr
