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

// Random generators and text formats.

#include <algorithm>
#include <charconv>
#include <string>
#include <system_error>
#include <vector>

#include "mmr/harness.h"

namespace mmr {
namespace {

constexpr int kGenerationRetries = 100;

bool Reaches(int n, const std::vector<Edge>& edges, int s, int t) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) adj[e.tail].push_back(e.head);
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {s};
  seen[s] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == t) return true;
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

// Costs for edge k are drawn from their own stream so the topology draw
// does not shift them.
void DrawCosts(const GeneratorSpec& spec, std::uint64_t seed,
               std::vector<Edge>& edges) {
  for (std::size_t k = 0; k < edges.size(); ++k) {
    SplitMix64 rng = SplitMix64::Stream(seed, k);
    const double m = rng.Uniform(1.0, spec.r);
    const double top = (1.0 + spec.d) * m;
    edges[k].lo = rng.Uniform((1.0 - spec.d) * m, top);
    edges[k].hi = rng.Uniform(edges[k].lo, top);
  }
}

void ValidateSpec(const GeneratorSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("need at least two nodes");
  if (!(spec.r >= 1.0)) throw std::invalid_argument("r must be at least 1");
  if (!(spec.d >= 0.0 && spec.d <= 1.0)) {
    throw std::invalid_argument("d must lie in [0, 1]");
  }
  if (spec.family == Family::kR) {
    if (!(spec.delta > 0.0 && spec.delta <= 1.0)) {
      throw std::invalid_argument("delta must lie in (0, 1]");
    }
  } else if (spec.w < 1 || spec.n - 2 < spec.w || (spec.n - 2) % spec.w) {
    throw std::invalid_argument("n - 2 must be a positive multiple of w");
  }
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool ParseNumber(std::string_view token, T& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

// Calls fn(line_number, line) for each line, without the newline.
template <typename Fn>
int ForEachLine(std::string_view text, Fn fn) {
  int number = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++number, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return number;
}

void AppendNumber(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

SplitMix64 SplitMix64::Stream(std::uint64_t seed, std::uint64_t k) {
  SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (k + 1)));
  return SplitMix64(mixer.Next());
}

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::Uniform01() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

double SplitMix64::Uniform(double a, double b) {
  if (a == b) return a;
  return std::min(b, a + (b - a) * Uniform01());
}

IntervalDigraph GenerateInstance(const GeneratorSpec& spec) {
  ValidateSpec(spec);
  const int n = spec.n;
  const int s = 0;
  const int t = n - 1;
  std::vector<Edge> edges;
  if (spec.family == Family::kK) {
    const int layers = (n - 2) / spec.w;
    auto node = [&](int layer, int i) { return 1 + layer * spec.w + i; };
    for (int i = 0; i < spec.w; ++i) edges.push_back({s, node(0, i)});
    for (int l = 0; l + 1 < layers; ++l) {
      for (int i = 0; i < spec.w; ++i) {
        for (int j = 0; j < spec.w; ++j) {
          edges.push_back({node(l, i), node(l + 1, j)});
        }
      }
    }
    for (int i = 0; i < spec.w; ++i) edges.push_back({node(layers - 1, i), t});
    DrawCosts(spec, spec.seed, edges);
    return IntervalDigraph(n, std::move(edges), s, t);
  }

  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    const std::uint64_t seed = spec.seed + attempt;
    SplitMix64 topology(seed);
    edges.clear();
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && topology.Bernoulli(spec.delta)) edges.push_back({u, v});
      }
    }
    if (!Reaches(n, edges, s, t)) continue;
    DrawCosts(spec, seed, edges);
    return IntervalDigraph(n, std::move(edges), s, t);
  }
  throw GenerationError("no s-t connected instance after " +
                        std::to_string(kGenerationRetries) + " seeds");
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

ScalarGraph ParseDimacs(std::string_view text) {
  ScalarGraph graph;
  bool have_header = false;
  std::size_t declared_arcs = 0;
  const int last = ForEachLine(text, [&](int no, std::string_view line) {
    const auto tok = Tokens(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "sp" ||
          !ParseNumber(tok[2], graph.node_count) ||
          !ParseNumber(tok[3], declared_arcs) || graph.node_count < 1) {
        throw ParseError(no, "malformed problem line");
      }
      have_header = true;
      graph.arcs.reserve(declared_arcs);
      return;
    }
    if (tok[0] == "a") {
      if (!have_header) throw ParseError(no, "arc before problem line");
      ScalarArc arc;
      if (tok.size() != 4 || !ParseNumber(tok[1], arc.tail) ||
          !ParseNumber(tok[2], arc.head) || !ParseNumber(tok[3], arc.cost)) {
        throw ParseError(no, "malformed arc line");
      }
      if (arc.tail < 1 || arc.tail > graph.node_count || arc.head < 1 ||
          arc.head > graph.node_count) {
        throw ParseError(no, "node id out of range");
      }
      if (arc.cost < 0) throw ParseError(no, "negative arc weight");
      if (graph.arcs.size() == declared_arcs) {
        throw ParseError(no, "arc count mismatch");
      }
      --arc.tail;
      --arc.head;
      graph.arcs.push_back(arc);
      return;
    }
    throw ParseError(no, "unknown line type");
  });
  if (!have_header) throw ParseError(0, "missing problem line");
  if (graph.arcs.size() != declared_arcs) {
    throw ParseError(last, "arc count mismatch");
  }
  return graph;
}

std::string WriteDimacs(const ScalarGraph& graph) {
  std::string out = "p sp " + std::to_string(graph.node_count) + " " +
                    std::to_string(graph.arcs.size()) + "\n";
  for (const ScalarArc& a : graph.arcs) {
    out += "a " + std::to_string(a.tail + 1) + " " +
           std::to_string(a.head + 1) + " " + std::to_string(a.cost) + "\n";
  }
  return out;
}

IntervalDigraph PerturbIntervals(const ScalarGraph& graph, int s, int t,
                                 std::uint64_t seed) {
  std::vector<Edge> edges;
  edges.reserve(graph.arcs.size());
  for (std::size_t k = 0; k < graph.arcs.size(); ++k) {
    const ScalarArc& a = graph.arcs[k];
    if (a.cost < 0) throw std::invalid_argument("negative arc cost");
    const double c = static_cast<double>(a.cost);
    SplitMix64 rng = SplitMix64::Stream(seed, k);
    const double lo = rng.Uniform(c - c / 10.0, c);
    const double hi = rng.Uniform(c, c + c / 10.0);
    edges.push_back({a.tail, a.head, lo, hi});
  }
  return IntervalDigraph(graph.node_count, std::move(edges), s, t);
}

std::string WriteNative(const IntervalDigraph& graph) {
  std::string out = "ri " + std::to_string(graph.node_count()) + " " +
                    std::to_string(graph.edge_count()) + " " +
                    std::to_string(graph.s()) + " " +
                    std::to_string(graph.t()) + "\n";
  for (const Edge& e : graph.edges()) {
    out += "e " + std::to_string(e.tail) + " " + std::to_string(e.head) + " ";
    AppendNumber(out, e.lo);
    out += ' ';
    AppendNumber(out, e.hi);
    out += '\n';
  }
  return out;
}

IntervalDigraph ReadNative(std::string_view text) {
  int nodes = -1;
  std::size_t declared = 0;
  int s = 0;
  int t = 0;
  std::vector<Edge> edges;
  const int last = ForEachLine(text, [&](int no, std::string_view line) {
    const auto tok = Tokens(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "ri") {
      if (nodes >= 0) throw ParseError(no, "duplicate header");
      if (tok.size() != 5 || !ParseNumber(tok[1], nodes) ||
          !ParseNumber(tok[2], declared) || !ParseNumber(tok[3], s) ||
          !ParseNumber(tok[4], t) || nodes < 0) {
        throw ParseError(no, "malformed header");
      }
      return;
    }
    if (tok[0] == "e") {
      if (nodes < 0) throw ParseError(no, "edge before header");
      Edge e;
      if (tok.size() != 5 || !ParseNumber(tok[1], e.tail) ||
          !ParseNumber(tok[2], e.head) || !ParseNumber(tok[3], e.lo) ||
          !ParseNumber(tok[4], e.hi)) {
        throw ParseError(no, "malformed edge line");
      }
      if (edges.size() == declared) throw ParseError(no, "edge count mismatch");
      edges.push_back(e);
      return;
    }
    throw ParseError(no, "unknown line type");
  });
  if (nodes < 0) throw ParseError(0, "missing header");
  if (edges.size() != declared) throw ParseError(last, "edge count mismatch");
  try {
    return IntervalDigraph(nodes, std::move(edges), s, t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace mmr
