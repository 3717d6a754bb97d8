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

#include "mmr/shortest_path.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace mmr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

IntervalInstance EdgeIntervals(const std::vector<Edge>& edges) {
  std::vector<double> lo(edges.size());
  std::vector<double> hi(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    lo[e] = edges[e].lo;
    hi[e] = edges[e].hi;
  }
  return IntervalInstance(std::move(lo), std::move(hi));
}

// Per-thread scratch arrays. Labels are valid only when their stamp matches
// the current search, so nothing is cleared between searches.
struct Workspace {
  struct Side {
    std::vector<double> dist;
    std::vector<int> pred;
    std::vector<unsigned> labeled;
    std::vector<unsigned> settled;
  };
  Side side[2];
  std::vector<unsigned> blocked_node;
  std::vector<unsigned> blocked_edge;
  unsigned stamp = 0;

  void Begin(int nodes, int edges) {
    const auto n = static_cast<std::size_t>(nodes);
    const auto m = static_cast<std::size_t>(edges);
    for (Side& s : side) {
      if (s.dist.size() < n) {
        s.dist.resize(n);
        s.pred.resize(n);
        s.labeled.resize(n, 0);
        s.settled.resize(n, 0);
      }
    }
    if (blocked_node.size() < n) blocked_node.resize(n, 0);
    if (blocked_edge.size() < m) blocked_edge.resize(m, 0);
    if (++stamp == 0) {
      for (Side& s : side) {
        std::fill(s.labeled.begin(), s.labeled.end(), 0);
        std::fill(s.settled.begin(), s.settled.end(), 0);
      }
      std::fill(blocked_node.begin(), blocked_node.end(), 0);
      std::fill(blocked_edge.begin(), blocked_edge.end(), 0);
      stamp = 1;
    }
  }

  bool labeled(int k, int v) const { return side[k].labeled[v] == stamp; }
  bool settled(int k, int v) const { return side[k].settled[v] == stamp; }
  bool node_blocked(int v) const { return blocked_node[v] == stamp; }
  bool edge_blocked(int e) const { return blocked_edge[e] == stamp; }
};

Workspace& LocalWorkspace() {
  thread_local Workspace ws;
  return ws;
}

using HeapEntry = std::pair<double, int>;
using MinHeap =
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

// Relaxes (label, pred) of v; returns true if the distance strictly improved.
bool Relax(Workspace& ws, int k, int v, double d, int e) {
  Workspace::Side& side = ws.side[k];
  if (!ws.labeled(k, v) || d < side.dist[v]) {
    side.labeled[v] = ws.stamp;
    side.dist[v] = d;
    side.pred[v] = e;
    return true;
  }
  if (d == side.dist[v] && e < side.pred[v]) side.pred[v] = e;
  return false;
}

// Pops stale entries; returns the top key or +inf.
double CleanTop(const Workspace& ws, int k, MinHeap& heap) {
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    if (ws.settled(k, v) || d > ws.side[k].dist[v]) {
      heap.pop();
      continue;
    }
    return d;
  }
  return kInf;
}

// Forward pred walk from `to` back to `from`.
std::vector<int> TraceForward(const IntervalDigraph& g, const Workspace& ws,
                              int from, int to) {
  std::vector<int> path;
  for (int v = to; v != from; v = g.edge(path.back()).tail) {
    path.push_back(ws.side[0].pred[v]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

void CheckCosts(const IntervalDigraph& g, std::span<const double> costs) {
  if (costs.size() != static_cast<std::size_t>(g.edge_count())) {
    throw std::invalid_argument("cost vector does not match edge count");
  }
}

std::optional<PathResult> SearchUni(const IntervalDigraph& g,
                                    std::span<const double> costs, int from,
                                    int to, Workspace& ws) {
  MinHeap heap;
  Relax(ws, 0, from, 0.0, -1);
  heap.emplace(0.0, from);
  while (CleanTop(ws, 0, heap) < kInf) {
    const auto [d, u] = heap.top();
    heap.pop();
    ws.side[0].settled[u] = ws.stamp;
    if (u == to) break;
    for (int e : g.out_edges(u)) {
      const int v = g.edge(e).head;
      if (ws.edge_blocked(e) || ws.node_blocked(v) || ws.settled(0, v)) {
        continue;
      }
      if (Relax(ws, 0, v, d + costs[e], e)) heap.emplace(d + costs[e], v);
    }
  }
  if (!ws.settled(0, to)) return std::nullopt;
  return PathResult{TraceForward(g, ws, from, to), ws.side[0].dist[to]};
}

std::optional<PathResult> SearchBi(const IntervalDigraph& g,
                                   std::span<const double> costs, int from,
                                   int to, Workspace& ws) {
  MinHeap heap[2];
  Relax(ws, 0, from, 0.0, -1);
  Relax(ws, 1, to, 0.0, -1);
  heap[0].emplace(0.0, from);
  heap[1].emplace(0.0, to);
  double best = kInf;
  int meet = -1;
  auto offer = [&](double value, int e) {
    if (value < best || (value == best && e < meet)) {
      best = value;
      meet = e;
    }
  };

  while (true) {
    const double top0 = CleanTop(ws, 0, heap[0]);
    const double top1 = CleanTop(ws, 1, heap[1]);
    if (top0 + top1 >= best || (top0 == kInf && top1 == kInf)) break;
    const int k = top0 <= top1 ? 0 : 1;
    const auto [d, u] = heap[k].top();
    heap[k].pop();
    ws.side[k].settled[u] = ws.stamp;
    const std::span<const int> arcs = k == 0 ? g.out_edges(u) : g.in_edges(u);
    for (int e : arcs) {
      if (ws.edge_blocked(e)) continue;
      const int v = k == 0 ? g.edge(e).head : g.edge(e).tail;
      if (ws.node_blocked(v)) continue;
      const double nd = d + costs[e];
      if (ws.labeled(1 - k, v)) offer(nd + ws.side[1 - k].dist[v], e);
      if (ws.settled(k, v)) continue;
      if (Relax(ws, k, v, nd, e)) heap[k].emplace(nd, v);
    }
  }
  if (meet < 0) return std::nullopt;

  const Edge& m = g.edge(meet);
  std::vector<int> path = TraceForward(g, ws, from, m.tail);
  path.push_back(meet);
  for (int v = m.head; v != to;) {
    const int e = ws.side[1].pred[v];
    path.push_back(e);
    v = g.edge(e).head;
  }
  double value = 0.0;
  for (int e : path) value += costs[e];
  return PathResult{std::move(path), value};
}

}  // namespace

IntervalDigraph::IntervalDigraph(int node_count, std::vector<Edge> edges,
                                 int s, int t)
    : node_count_(node_count),
      edges_(std::move(edges)),
      s_(s),
      t_(t),
      instance_(EdgeIntervals(edges_)) {
  if (node_count_ < 2) {
    throw std::invalid_argument("graph needs at least two nodes");
  }
  if (s_ < 0 || s_ >= node_count_ || t_ < 0 || t_ >= node_count_) {
    throw std::invalid_argument("source or target out of range");
  }
  if (s_ == t_) throw std::invalid_argument("source equals target");
  out_start_.assign(node_count_ + 1, 0);
  in_start_.assign(node_count_ + 1, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.tail < 0 || edge.tail >= node_count_ || edge.head < 0 ||
        edge.head >= node_count_) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " has an endpoint out of range");
    }
    ++out_start_[edge.tail + 1];
    ++in_start_[edge.head + 1];
  }
  for (int v = 0; v < node_count_; ++v) {
    out_start_[v + 1] += out_start_[v];
    in_start_[v + 1] += in_start_[v];
  }
  out_ids_.resize(edges_.size());
  in_ids_.resize(edges_.size());
  std::vector<int> out_fill(out_start_.begin(), out_start_.end() - 1);
  std::vector<int> in_fill(in_start_.begin(), in_start_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    out_ids_[out_fill[edges_[e].tail]++] = static_cast<int>(e);
    in_ids_[in_fill[edges_[e].head]++] = static_cast<int>(e);
  }
}

bool IsSimplePath(const IntervalDigraph& graph, std::span<const int> edges,
                  int from, int to) {
  std::vector<char> visited(graph.node_count(), 0);
  int at = from;
  visited[at] = 1;
  for (int e : edges) {
    if (e < 0 || e >= graph.edge_count()) return false;
    const Edge& edge = graph.edge(e);
    if (edge.tail != at || visited[edge.head]) return false;
    at = edge.head;
    visited[at] = 1;
  }
  return at == to;
}

std::optional<PathResult> Dijkstra(const IntervalDigraph& graph,
                                   std::span<const double> costs, int from,
                                   int to) {
  CheckCosts(graph, costs);
  if (from == to) return PathResult{};
  Workspace& ws = LocalWorkspace();
  ws.Begin(graph.node_count(), graph.edge_count());
  return SearchUni(graph, costs, from, to, ws);
}

std::optional<PathResult> BidirectionalDijkstra(const IntervalDigraph& graph,
                                                std::span<const double> costs,
                                                int from, int to) {
  CheckCosts(graph, costs);
  if (from == to) return PathResult{};
  Workspace& ws = LocalWorkspace();
  ws.Begin(graph.node_count(), graph.edge_count());
  return SearchBi(graph, costs, from, to, ws);
}

void ValidateConstraint(const IntervalDigraph& graph,
                        const PathConstraint& constraint) {
  if (!IsSimplePath(graph, constraint.in, graph.s(),
                    constraint.in.empty()
                        ? graph.s()
                        : graph.edge(std::clamp(constraint.in.back(), 0,
                                                graph.edge_count() - 1))
                              .head)) {
    throw std::invalid_argument("IN edges do not form a simple chain from s");
  }
  for (int e : constraint.out) {
    if (e < 0 || e >= graph.edge_count()) {
      throw std::invalid_argument("OUT edge id out of range");
    }
    if (std::find(constraint.in.begin(), constraint.in.end(), e) !=
        constraint.in.end()) {
      throw std::invalid_argument("edge is both IN and OUT");
    }
  }
}

namespace {

std::optional<PathResult> SolveConstrained(const IntervalDigraph& g,
                                           std::span<const double> costs,
                                           const PathConstraint& constraint,
                                           bool bidirectional) {
  CheckCosts(g, costs);
  if (!constraint.empty()) ValidateConstraint(g, constraint);
  Workspace& ws = LocalWorkspace();
  ws.Begin(g.node_count(), g.edge_count());

  int from = g.s();
  double prefix = 0.0;
  for (int e : constraint.in) {
    ws.blocked_node[from] = ws.stamp;
    prefix += costs[e];
    from = g.edge(e).head;
  }
  for (int e : constraint.out) ws.blocked_edge[e] = ws.stamp;

  std::optional<PathResult> tail;
  if (from == g.t()) {
    tail = PathResult{};
  } else {
    if (bidirectional) {
      tail = SearchBi(g, costs, from, g.t(), ws);
      // Zero-cost cycles can make the two half paths overlap.
      if (tail && !IsSimplePath(g, tail->edges, from, g.t())) {
        ws.Begin(g.node_count(), g.edge_count());
        for (int e : constraint.in) ws.blocked_node[g.edge(e).tail] = ws.stamp;
        for (int e : constraint.out) ws.blocked_edge[e] = ws.stamp;
        tail = SearchUni(g, costs, from, g.t(), ws);
      }
    } else {
      tail = SearchUni(g, costs, from, g.t(), ws);
    }
  }
  if (!tail) return std::nullopt;
  PathResult out;
  out.edges = constraint.in;
  out.edges.insert(out.edges.end(), tail->edges.begin(), tail->edges.end());
  out.value = prefix + tail->value;
  return out;
}

}  // namespace

std::optional<PathResult> ConstrainedSp(const IntervalDigraph& graph,
                                        std::span<const double> costs,
                                        const PathConstraint& constraint,
                                        bool bidirectional) {
  return SolveConstrained(graph, costs, constraint, bidirectional);
}

std::optional<double> TwoUnitMinFlow(const IntervalDigraph& graph,
                                     std::span<const double> lo,
                                     std::span<const double> hi,
                                     const PathConstraint& constraint) {
  CheckCosts(graph, lo);
  CheckCosts(graph, hi);
  ValidateConstraint(graph, constraint);
  const int n = graph.node_count();
  const int m = graph.edge_count();
  std::vector<double> first(lo.begin(), lo.end());
  std::vector<double> second(hi.begin(), hi.end());
  for (int e = 0; e < m; ++e) {
    if (first[e] > second[e]) {
      throw std::invalid_argument("two-unit flow needs lo <= hi");
    }
  }
  for (int e : constraint.in) first[e] = second[e] = hi[e];
  for (int e : constraint.out) first[e] = second[e] = lo[e];

  // First unit: a plain shortest path under `first`.
  Workspace& ws = LocalWorkspace();
  ws.Begin(n, m);
  std::optional<PathResult> p1 = SearchUni(graph, first, graph.s(), graph.t(), ws);
  if (!p1) return std::nullopt;
  const double d_t = p1->value;
  // Potentials truncated at d(t) stay feasible for the residual graph.
  std::vector<double> pi(n, d_t);
  for (int v = 0; v < n; ++v) {
    if (ws.settled(0, v)) pi[v] = ws.side[0].dist[v];
  }
  std::vector<char> on_p1(m, 0);
  for (int e : p1->edges) on_p1[e] = 1;

  // Second unit on the residual graph with reduced costs. Forward arcs cost
  // `first`, or `second` on edges already used; used edges also offer a
  // backward arc at -first.
  std::vector<double> dist(n, kInf);
  std::vector<char> done(n, 0);
  MinHeap heap;
  dist[graph.s()] = 0.0;
  heap.emplace(0.0, graph.s());
  auto push = [&](int v, double d) {
    if (d < dist[v]) {
      dist[v] = d;
      heap.emplace(d, v);
    }
  };
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u] || d > dist[u]) continue;
    done[u] = 1;
    if (u == graph.t()) break;
    for (int e : graph.out_edges(u)) {
      const int v = graph.edge(e).head;
      const double c = on_p1[e] ? second[e] : first[e];
      push(v, d + std::max(0.0, c + pi[u] - pi[v]));
    }
    for (int e : graph.in_edges(u)) {
      if (!on_p1[e]) continue;
      const int v = graph.edge(e).tail;
      push(v, d + std::max(0.0, -first[e] + pi[u] - pi[v]));
    }
  }
  // Both units can always share the first path, so t stays reachable.
  return d_t + dist[graph.t()] - pi[graph.s()] + pi[graph.t()];
}

ShortestPathOracle::ShortestPathOracle(const IntervalDigraph& graph,
                                       bool bidirectional)
    : graph_(graph), bidirectional_(bidirectional) {
  if (!Dijkstra(graph_, graph_.instance().lo(), graph_.s(), graph_.t())) {
    throw std::invalid_argument("target is unreachable from source");
  }
}

std::optional<PathResult> ShortestPathOracle::SolvePath(
    std::span<const double> costs, const PathConstraint& constraint) const {
  return SolveConstrained(graph_, costs, constraint, bidirectional_);
}

std::optional<OracleSolution> ShortestPathOracle::Solve(
    std::span<const double> costs, const Restriction& restriction) const {
  std::optional<PathResult> path = SolvePath(costs, restriction);
  if (!path) return std::nullopt;
  SolutionIndicator x = path->solution();
  const double value = Val(x, costs);
  return OracleSolution{std::move(x), value};
}

std::vector<int> OrderPath(const IntervalDigraph& graph,
                           const SolutionIndicator& path) {
  std::unordered_map<int, int> leaving;
  for (int e : path.members()) {
    if (e < 0 || e >= graph.edge_count()) {
      throw std::invalid_argument("path edge out of range");
    }
    if (!leaving.emplace(graph.edge(e).tail, e).second) {
      throw std::invalid_argument("solution is not a simple path");
    }
  }
  std::vector<int> ordered;
  for (int v = graph.s(); v != graph.t();) {
    auto it = leaving.find(v);
    if (it == leaving.end()) {
      throw std::invalid_argument("solution is not an s-t path");
    }
    ordered.push_back(it->second);
    v = graph.edge(it->second).head;
    leaving.erase(it);
  }
  if (!leaving.empty()) {
    throw std::invalid_argument("solution has edges off its s-t path");
  }
  return ordered;
}

}  // namespace mmr
