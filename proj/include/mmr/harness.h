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

// Instance generation, file formats, brute-force reference solvers and the
// experiment drivers behind the command line tool.

#ifndef MMR_HARNESS_H_
#define MMR_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmr/branch_bound.h"
#include "mmr/shortest_path.h"

namespace mmr {

// SplitMix64. Fully specified, so instances reproduce on any platform
// (unlike the standard distributions). Stream(seed, k) gives an
// independent generator for item k.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 Stream(std::uint64_t seed, std::uint64_t k);

  std::uint64_t Next();
  // Uniform in [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform in [a, b]; returns a when a == b.
  double Uniform(double a, double b);
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  std::uint64_t state_;
};

enum class Family { kR, kK };

struct GeneratorSpec {
  Family family = Family::kR;
  int n = 10;
  double r = 1000.0;  // cost magnitude
  double d = 0.5;     // cost variability in [0, 1]
  double delta = 1.0; // edge density (R)
  int w = 1;          // layer width (K)
  std::uint64_t seed = 0;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// R: every ordered pair (u, v), u != v, is an edge with probability delta,
// s = 0 and t = n - 1; a draw without an s-t path is retried with seed + 1
// up to 100 times. K: s = 0, t = n - 1 and (n - 2) / w layers of w nodes,
// s feeding the first layer, consecutive layers completely connected and
// the last layer feeding t. Edge costs: m uniform in [1, r], lo uniform in
// [(1 - d) m, (1 + d) m], hi uniform in [lo, (1 + d) m]. Throws
// std::invalid_argument on a bad spec and GenerationError when retries run
// out.
IntervalDigraph GenerateInstance(const GeneratorSpec& spec);

struct ScalarArc {
  int tail = 0;
  int head = 0;
  std::int64_t cost = 0;

  friend bool operator==(const ScalarArc&, const ScalarArc&) = default;
};

struct ScalarGraph {
  int node_count = 0;
  std::vector<ScalarArc> arcs;  // 0-based node ids

  friend bool operator==(const ScalarGraph&, const ScalarGraph&) = default;
};

// Carries the 1-based line number of the offending line (0 when the
// problem is with the file as a whole).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// DIMACS shortest path (.gr) text.
ScalarGraph ParseDimacs(std::string_view text);
std::string WriteDimacs(const ScalarGraph& graph);

// lo uniform in [c - c/10, c] and hi uniform in [c, c + c/10] per arc.
IntervalDigraph PerturbIntervals(const ScalarGraph& graph, int s, int t,
                                 std::uint64_t seed);

// Native interval format: "ri <nodes> <edges> <s> <t>" followed by one
// "e <tail> <head> <lo> <hi>" line per edge, 0-based, shortest round-trip
// decimal representation.
std::string WriteNative(const IntervalDigraph& graph);
IntervalDigraph ReadNative(std::string_view text);

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All simple s-t paths in DFS order (edges tried by increasing id). Throws
// OracleRefused past `path_limit` paths.
std::vector<std::vector<int>> EnumeratePaths(const IntervalDigraph& graph,
                                             std::size_t path_limit);

struct BruteForceResult {
  double opt = 0.0;
  std::vector<int> optimal_path;
  std::vector<std::vector<int>> paths;
  std::vector<double> regrets;  // per path, in enumeration order
};

// Exact minmax regret by enumeration; every val* is a minimum over the
// enumerated paths, with no shortest path search involved.
BruteForceResult BruteForceOpt(const IntervalDigraph& graph,
                               std::size_t path_limit = 5000);

// Value of the full game: every path against every favoring scenario.
double BruteForceLbStar(const IntervalDigraph& graph,
                        std::size_t path_limit = 400);

struct ExperimentRow {
  std::string bound;
  std::string stat;
  double value = 0.0;
};

struct LbExperimentConfig {
  GeneratorSpec spec;  // instance k uses seed spec.seed + k
  int count = 1;
  // Any of kz, cg, mgd, do, do5, do10, do15, do20.
  std::vector<std::string> bounds = {"do5", "do10", "do15", "do20",
                                     "do",  "cg",   "kz"};
  std::size_t max_support_x = 50;
  bool exact = false;  // compute OPT by branch and bound
  double time_limit_ms = std::numeric_limits<double>::infinity();
  int threads = 1;
};

// Per bound: mean/std/min/max of time_ms, gap_medsol, gap_minsol and
// gap_opt (NaN without OPT). Failed instances become rows with bound
// "error" and the seed in `value`.
std::vector<ExperimentRow> RunLbExperiment(const LbExperimentConfig& config);
// Same over given instances (config.spec and config.count are ignored);
// error rows carry the instance index.
std::vector<ExperimentRow> RunLbExperiment(
    const std::vector<IntervalDigraph>& instances,
    const LbExperimentConfig& config);

struct BbExperimentConfig {
  GeneratorSpec spec;
  int count = 1;
  std::vector<LbStrategy> strategies = {LbStrategy::kMgd, LbStrategy::kCg,
                                        LbStrategy::kDo};
  BbConfig bb;
  int threads = 1;
};

struct BbRow {
  std::string instance;
  std::string solver;
  double time_ms = 0.0;
  std::size_t nodes = 0;
  double opt = 0.0;
  bool complete = true;
};

// Solves each instance with every strategy. Throws std::logic_error if
// two complete runs disagree on OPT by more than 1e-6.
std::vector<BbRow> RunBbExperiment(const BbExperimentConfig& config);
std::vector<BbRow> RunBbExperiment(const IntervalDigraph& graph,
                                   const std::string& instance,
                                   const std::vector<LbStrategy>& strategies,
                                   const BbConfig& bb = {});

struct VerifyReport {
  double opt = 0.0;            // by enumeration
  double lb_star = 0.0;        // converged double oracle
  double lb_star_brute = 0.0;  // full game
  double lb_kz = 0.0;
  double lb_cg = 0.0;
  double reg_mid = 0.0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Cross-checks one small instance against the enumeration oracles:
// branch and bound with every strategy reproduces OPT, the converged
// double oracle matches the full game (1e-6), every anytime bound stays
// below OPT, LB*_n is non-decreasing in n, and
// LB_KZ, LB_CG <= LB* <= OPT <= Reg(x_mid) <= 2 OPT.
VerifyReport Verify(const IntervalDigraph& graph,
                    std::size_t path_limit = 400);

// Long format "bound,stat,value".
void WriteLbCsv(std::ostream& out, const std::vector<ExperimentRow>& rows);
// "instance,solver,time_ms,nodes,opt,complete".
void WriteBbCsv(std::ostream& out, const std::vector<BbRow>& rows);

}  // namespace mmr

#endif  // MMR_HARNESS_H_
