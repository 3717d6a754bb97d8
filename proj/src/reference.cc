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

// Enumeration-based reference solvers for small instances.

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "mmr/game.h"
#include "mmr/harness.h"

namespace mmr {
namespace {

double PathCost(const std::vector<int>& p, const std::vector<double>& c) {
  double v = 0.0;
  for (int e : p) v += c[e];
  return v;
}

double BestCost(const std::vector<std::vector<int>>& paths,
                const std::vector<double>& c) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : paths) best = std::min(best, PathCost(p, c));
  return best;
}

// Edges of p high and the rest low (c^p), or the reverse (favoring p).
std::vector<double> Extreme(const IntervalDigraph& g, const std::vector<int>& p,
                            bool path_high) {
  std::vector<double> c(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    c[e] = path_high ? g.edge(e).lo : g.edge(e).hi;
  }
  for (int e : p) c[e] = path_high ? g.edge(e).hi : g.edge(e).lo;
  return c;
}

std::vector<std::vector<int>> NonEmptyPaths(const IntervalDigraph& g,
                                            std::size_t limit) {
  auto paths = EnumeratePaths(g, limit);
  if (paths.empty()) throw std::invalid_argument("t is unreachable from s");
  return paths;
}

}  // namespace

std::vector<std::vector<int>> EnumeratePaths(const IntervalDigraph& graph,
                                             std::size_t path_limit) {
  std::vector<std::vector<int>> out_edges(graph.node_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    out_edges[graph.edge(e).tail].push_back(e);
  }
  std::vector<std::vector<int>> paths;
  std::vector<int> path;
  std::vector<char> on_path(graph.node_count(), 0);
  auto dfs = [&](auto&& self, int u) -> void {
    if (u == graph.t()) {
      if (paths.size() == path_limit) {
        throw OracleRefused("more than " + std::to_string(path_limit) +
                            " s-t paths");
      }
      paths.push_back(path);
      return;
    }
    on_path[u] = 1;
    for (int e : out_edges[u]) {
      const int v = graph.edge(e).head;
      if (on_path[v]) continue;
      path.push_back(e);
      self(self, v);
      path.pop_back();
    }
    on_path[u] = 0;
  };
  dfs(dfs, graph.s());
  return paths;
}

BruteForceResult BruteForceOpt(const IntervalDigraph& graph,
                               std::size_t path_limit) {
  BruteForceResult r;
  r.paths = NonEmptyPaths(graph, path_limit);
  r.opt = std::numeric_limits<double>::infinity();
  for (const auto& p : r.paths) {
    const std::vector<double> c = Extreme(graph, p, true);
    r.regrets.push_back(PathCost(p, c) - BestCost(r.paths, c));
    if (r.regrets.back() < r.opt) {
      r.opt = r.regrets.back();
      r.optimal_path = p;
    }
  }
  return r;
}

double BruteForceLbStar(const IntervalDigraph& graph, std::size_t path_limit) {
  const auto paths = NonEmptyPaths(graph, path_limit);
  GameMatrix a(paths.size(), paths.size());
  for (std::size_t j = 0; j < paths.size(); ++j) {
    const std::vector<double> c = Extreme(graph, paths[j], false);
    const double best = BestCost(paths, c);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      a(i, j) = PathCost(paths[i], c) - best;
    }
  }
  return SolveZeroSum(a).value;
}

}  // namespace mmr
