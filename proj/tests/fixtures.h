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

// Shared test graphs and a naive path enumerator used as an oracle.

#ifndef MMR_TESTS_FIXTURES_H_
#define MMR_TESTS_FIXTURES_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "mmr/shortest_path.h"

namespace mmr::testing {

// Six nodes (0-based: node k here is node k + 1 in the usual drawing),
// source 0, target 5. Edge ids:
//   0: 0->1 [2,4]   1: 0->2 [3,5]   2: 1->2 [1,2]   3: 1->3 [1,4]
//   4: 2->3 [2,3]   5: 2->4 [2,3]   6: 3->5 [2,3]   7: 4->5 [1,2]
inline IntervalDigraph Figure1() {
  return IntervalDigraph(6,
                         {{0, 1, 2, 4},
                          {0, 2, 3, 5},
                          {1, 2, 1, 2},
                          {1, 3, 1, 4},
                          {2, 3, 2, 3},
                          {2, 4, 2, 3},
                          {3, 5, 2, 3},
                          {4, 5, 1, 2}},
                         0, 5);
}

// Two parallel edges with intervals [5,10] and [7,12].
inline IntervalDigraph TwoParallel() {
  return IntervalDigraph(2, {{0, 1, 5, 10}, {0, 1, 7, 12}}, 0, 1);
}

// All simple s-t paths, by DFS over edges in id order.
inline std::vector<std::vector<int>> AllPaths(const IntervalDigraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on(g.node_count(), 0);
  auto dfs = [&](auto&& self, int u) -> void {
    if (u == g.t()) {
      out.push_back(path);
      return;
    }
    on[u] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (edge.tail != u || on[edge.head]) continue;
      path.push_back(e);
      self(self, edge.head);
      path.pop_back();
    }
    on[u] = 0;
  };
  dfs(dfs, g.s());
  return out;
}

inline double PathValue(const std::vector<int>& p,
                        const std::vector<double>& costs) {
  double v = 0.0;
  for (int e : p) v += costs[e];
  return v;
}

inline double MinOverPaths(const std::vector<std::vector<int>>& paths,
                           const std::vector<double>& costs) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : paths) best = std::min(best, PathValue(p, costs));
  return best;
}

// Max regret of path p by enumeration: value under c^p minus the best path.
inline double EnumeratedRegret(const IntervalDigraph& g,
                               const std::vector<std::vector<int>>& paths,
                               const std::vector<int>& p) {
  std::vector<double> c(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) c[e] = g.edge(e).lo;
  for (int e : p) c[e] = g.edge(e).hi;
  return PathValue(p, c) - MinOverPaths(paths, c);
}

// Random digraph with each ordered pair present with probability
// `density`, integer-valued intervals, s = 0 and t = n - 1. May be
// disconnected.
inline std::vector<Edge> RandomEdges(int n, double density, std::uint64_t seed,
                                     int max_cost = 10) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> cost(0, max_cost);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || !keep(rng)) continue;
      const double lo = cost(rng);
      edges.push_back({u, v, lo, lo + cost(rng)});
    }
  }
  return edges;
}

}  // namespace mmr::testing

#endif  // MMR_TESTS_FIXTURES_H_
