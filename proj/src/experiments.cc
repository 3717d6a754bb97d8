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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mmr/bounds.h"
#include "mmr/harness.h"

namespace mmr {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double MsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Runs body(k) for k in [0, count) on up to `threads` workers.
template <typename Body>
void ParallelFor(int count, int threads, Body body) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (int k; (k = next++) < count;) body(k);
    });
  }
  for (auto& th : pool) th.join();
}

struct BoundSample {
  double time_ms = 0.0;
  Gaps gaps;
};

struct InstanceOutcome {
  std::map<std::string, BoundSample> samples;
  std::optional<std::string> error;
};

int DoIterations(const std::string& name) {
  int n = 0;
  const char* end = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(name.data() + 2, end, n);
  if (ec != std::errc() || ptr != end || n < 1) {
    throw std::invalid_argument("unknown bound '" + name + "'");
  }
  return n;
}

void ValidateBound(const std::string& name) {
  if (name == "kz" || name == "cg" || name == "mgd" || name == "do") return;
  if (name.rfind("do", 0) == 0) {
    DoIterations(name);
    return;
  }
  throw std::invalid_argument("unknown bound '" + name + "'");
}

InstanceOutcome RunLbInstance(const LbExperimentConfig& config,
                              const IntervalDigraph& g) {
  InstanceOutcome out;
  const ShortestPathOracle oracle(g);

  const BoundReport kz = LbKz(oracle);
  const SolutionIndicator& mid = *kz.midpoint;

  auto start = std::chrono::steady_clock::now();
  DoubleOracleConfig dc;
  dc.max_support_x = config.max_support_x;
  const DoubleOracleResult full = RunDoubleOracle(
      oracle, {mid}, {ScenarioDescriptor::Penalizing(mid)}, dc);
  const double do_ms = MsSince(start);
  const double reg_minsol = MinSol(oracle, full.solutions, mid).regret;

  std::optional<double> opt;
  if (config.exact) {
    BbConfig bb;
    bb.max_support_x = config.max_support_x;
    bb.time_limit_ms = config.time_limit_ms;
    const BBStats st = BbSolve(g, LbStrategy::kDo, bb);
    if (st.complete) opt = st.opt;
  }

  for (const std::string& name : config.bounds) {
    double lb = 0.0;
    double ms = 0.0;
    if (name == "kz") {
      lb = kz.value;
      ms = kz.elapsed_ms;
    } else if (name == "do") {
      lb = full.lower_bound;
      ms = do_ms;
    } else if (name == "cg" || name == "mgd") {
      const BoundReport r = name == "cg" ? LbCg(g) : LbMgd(g);
      lb = r.value;
      ms = r.elapsed_ms;
    } else {
      start = std::chrono::steady_clock::now();
      lb = LbStarN(oracle, DoIterations(name), config.max_support_x);
      ms = MsSince(start);
    }
    BoundSample& s = out.samples[name];
    s.time_ms = ms;
    s.gaps = GapMetrics(std::max(0.0, lb), kz.midpoint_regret, reg_minsol,
                        opt);
  }
  return out;
}

void AddStats(std::vector<ExperimentRow>& rows, const std::string& bound,
              const std::string& what, const std::vector<double>& values) {
  double mean = kNaN;
  double sd = kNaN;
  double lo = kNaN;
  double hi = kNaN;
  if (!values.empty()) {
    double sum = 0.0;
    for (double v : values) sum += v;
    mean = sum / values.size();
    lo = *std::min_element(values.begin(), values.end());
    hi = *std::max_element(values.begin(), values.end());
    if (std::isinf(mean)) {
      sd = std::isinf(lo) ? 0.0 : kInf;
    } else if (!std::isnan(mean)) {
      double sq = 0.0;
      for (double v : values) sq += (v - mean) * (v - mean);
      sd = std::sqrt(sq / values.size());
    }
  }
  rows.push_back({bound, what + "_mean", mean});
  rows.push_back({bound, what + "_std", sd});
  rows.push_back({bound, what + "_min", lo});
  rows.push_back({bound, what + "_max", hi});
}

std::string Number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<ExperimentRow> Summarize(
    const LbExperimentConfig& config,
    const std::vector<InstanceOutcome>& outcomes,
    const std::vector<double>& ids) {
  std::vector<ExperimentRow> rows;
  bool any_ok = false;
  for (const auto& o : outcomes) any_ok |= !o.error;
  if (any_ok) {
    for (const std::string& name : config.bounds) {
      std::vector<double> time, medsol, minsol, opt;
      for (const auto& o : outcomes) {
        if (o.error) continue;
        const BoundSample& s = o.samples.at(name);
        time.push_back(s.time_ms);
        medsol.push_back(s.gaps.medsol);
        minsol.push_back(s.gaps.minsol);
        opt.push_back(s.gaps.opt.value_or(kNaN));
      }
      AddStats(rows, name, "time_ms", time);
      AddStats(rows, name, "gap_medsol", medsol);
      AddStats(rows, name, "gap_minsol", minsol);
      AddStats(rows, name, "gap_opt", opt);
    }
  }
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k].error) rows.push_back({"error", *outcomes[k].error, ids[k]});
  }
  return rows;
}

}  // namespace

std::vector<ExperimentRow> RunLbExperiment(const LbExperimentConfig& config) {
  for (const auto& name : config.bounds) ValidateBound(name);
  if (config.count < 0) throw std::invalid_argument("negative count");
  std::vector<InstanceOutcome> outcomes(config.count);
  std::vector<double> ids(config.count);
  ParallelFor(config.count, config.threads, [&](int k) {
    GeneratorSpec spec = config.spec;
    spec.seed += k;
    ids[k] = static_cast<double>(spec.seed);
    try {
      outcomes[k] = RunLbInstance(config, GenerateInstance(spec));
    } catch (const std::exception& e) {
      outcomes[k].error = e.what();
    }
  });
  return Summarize(config, outcomes, ids);
}

std::vector<ExperimentRow> RunLbExperiment(
    const std::vector<IntervalDigraph>& instances,
    const LbExperimentConfig& config) {
  for (const auto& name : config.bounds) ValidateBound(name);
  const int count = static_cast<int>(instances.size());
  std::vector<InstanceOutcome> outcomes(count);
  std::vector<double> ids(count);
  ParallelFor(count, config.threads, [&](int k) {
    ids[k] = k;
    try {
      outcomes[k] = RunLbInstance(config, instances[k]);
    } catch (const std::exception& e) {
      outcomes[k].error = e.what();
    }
  });
  return Summarize(config, outcomes, ids);
}

std::vector<BbRow> RunBbExperiment(const IntervalDigraph& graph,
                                   const std::string& instance,
                                   const std::vector<LbStrategy>& strategies,
                                   const BbConfig& bb) {
  std::vector<BbRow> rows;
  std::optional<double> reference;
  for (LbStrategy s : strategies) {
    const BBStats st = BbSolve(graph, s, bb);
    rows.push_back({instance, std::string(StrategyName(s)), st.elapsed_ms,
                    st.nodes_expanded, st.opt, st.complete});
    if (!st.complete) continue;
    if (!reference) {
      reference = st.opt;
    } else if (std::abs(*reference - st.opt) > 1e-6) {
      throw std::logic_error("strategies disagree on OPT for " + instance +
                             ": " + Number(*reference) + " vs " +
                             Number(st.opt));
    }
  }
  return rows;
}

std::vector<BbRow> RunBbExperiment(const BbExperimentConfig& config) {
  if (config.count < 0) throw std::invalid_argument("negative count");
  std::vector<std::vector<BbRow>> per_instance(config.count);
  std::vector<std::exception_ptr> failures(config.count);
  ParallelFor(config.count, config.threads, [&](int k) {
    try {
      GeneratorSpec spec = config.spec;
      spec.seed += k;
      per_instance[k] =
          RunBbExperiment(GenerateInstance(spec), "seed=" + Number(spec.seed),
                          config.strategies, config.bb);
    } catch (...) {
      failures[k] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::vector<BbRow> rows;
  for (auto& r : per_instance) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

void WriteLbCsv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "bound,stat,value\n";
  for (const auto& r : rows) {
    out << CsvField(r.bound) << ',' << CsvField(r.stat) << ','
        << Number(r.value) << '\n';
  }
}

void WriteBbCsv(std::ostream& out, const std::vector<BbRow>& rows) {
  out << "instance,solver,time_ms,nodes,opt,complete\n";
  for (const auto& r : rows) {
    out << CsvField(r.instance) << ',' << r.solver << ',' << Number(r.time_ms)
        << ',' << r.nodes << ',' << Number(r.opt) << ','
        << (r.complete ? 1 : 0) << '\n';
  }
}

}  // namespace mmr
