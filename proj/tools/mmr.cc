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

// Command line front end: instance generation, bound comparisons, branch
// and bound runs, DIMACS ingestion and brute-force verification.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmr/branch_bound.h"
#include "mmr/harness.h"

namespace {

using namespace mmr;

struct SpecFlags {
  std::string family = "R";
  GeneratorSpec spec;
  int count = 1;

  void Register(CLI::App* app, int default_n) {
    spec.n = default_n;
    app->add_option("--family", family, "Instance family")
        ->check(CLI::IsMember({"R", "K"}));
    app->add_option("--nodes", spec.n, "Node count")->capture_default_str();
    app->add_option("--r", spec.r, "Cost magnitude")->capture_default_str();
    app->add_option("--d", spec.d, "Cost variability in [0, 1]")
        ->capture_default_str();
    app->add_option("--delta", spec.delta, "Edge density (R family)")
        ->capture_default_str();
    app->add_option("--width", spec.w, "Layer width (K family)")
        ->capture_default_str();
    app->add_option("--seed", spec.seed, "Seed of the first instance")
        ->capture_default_str();
    app->add_option("--count", count, "Number of instances")
        ->capture_default_str();
  }

  GeneratorSpec Resolved() const {
    GeneratorSpec s = spec;
    s.family = family == "K" ? Family::kK : Family::kR;
    return s;
  }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

// Runs `emit` against the --out file, or stdout when none was given.
template <typename Emit>
void WithOutput(const std::string& path, Emit emit) {
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  emit(out);
}

std::string InstanceName(const GeneratorSpec& s) {
  std::ostringstream name;
  if (s.family == Family::kR) {
    name << "R-" << s.n << "-" << s.r << "-" << s.d << "-" << s.delta;
  } else {
    name << "K-" << s.n << "-" << s.r << "-" << s.d << "-" << s.w;
  }
  name << "-s" << s.seed << ".ri";
  return name.str();
}

std::vector<LbStrategy> Strategies(const std::vector<std::string>& names) {
  static const std::map<std::string, LbStrategy> kByName = {
      {"mgd", LbStrategy::kMgd}, {"cg", LbStrategy::kCg}, {"do", LbStrategy::kDo}};
  std::vector<LbStrategy> out;
  for (const auto& n : names) {
    if (n == "all") return {LbStrategy::kMgd, LbStrategy::kCg, LbStrategy::kDo};
    out.push_back(kByName.at(n));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minmax regret shortest path: bounds and exact solver"};
  app.require_subcommand(1);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Write generated instances");
  SpecFlags gen_spec;
  gen_spec.Register(gen, 10);
  std::string gen_out;
  gen->add_option("--out", gen_out,
                  "Output file (one instance) or directory (several); "
                  "stdout when omitted");

  // lb
  CLI::App* lb = app.add_subcommand("lb", "Compare lower bounds (CSV)");
  SpecFlags lb_spec;
  lb_spec.Register(lb, 10);
  std::vector<std::string> lb_names = {"all"};
  std::vector<std::string> lb_inputs;
  LbExperimentConfig lb_config;
  std::string lb_out;
  lb->add_option("--lb", lb_names, "Bounds to compute")
      ->delimiter(',')
      ->check(CLI::IsMember(
          {"kz", "cg", "mgd", "do", "do5", "do10", "do15", "do20", "all"}))
      ->capture_default_str();
  lb->add_option("--max-support", lb_config.max_support_x,
                 "Cap on the solution support of the double oracle")
      ->capture_default_str();
  lb->add_flag("--exact", lb_config.exact, "Add Gap-Opt via branch and bound");
  lb->add_option("--time-limit-ms", lb_config.time_limit_ms,
                 "Branch and bound time limit per instance");
  lb->add_option("--threads", lb_config.threads, "Worker threads")
      ->capture_default_str();
  lb->add_option("--input", lb_inputs, "Native instance files instead of "
                                       "generated ones");
  lb->add_option("--out", lb_out, "CSV path; stdout when omitted");

  // bb
  CLI::App* bb = app.add_subcommand("bb", "Branch and bound comparison (CSV)");
  SpecFlags bb_spec;
  bb_spec.Register(bb, 10);
  std::vector<std::string> bb_names = {"all"};
  std::vector<std::string> bb_inputs;
  BbExperimentConfig bb_config;
  bool cold_start = false;
  std::string bb_out;
  bb->add_option("--bb", bb_names, "Lower bound used at the nodes")
      ->delimiter(',')
      ->check(CLI::IsMember({"mgd", "cg", "do", "all"}))
      ->capture_default_str();
  bb->add_option("--max-support", bb_config.bb.max_support_x,
                 "Cap on the solution support of the double oracle")
      ->capture_default_str();
  bb->add_option("--time-limit-ms", bb_config.bb.time_limit_ms,
                 "Time limit per solve");
  bb->add_flag("--cold-start", cold_start,
               "Do not share generated strategies between nodes");
  bb->add_option("--threads", bb_config.threads, "Worker threads")
      ->capture_default_str();
  bb->add_option("--input", bb_inputs, "Native instance files instead of "
                                       "generated ones");
  bb->add_option("--out", bb_out, "CSV path; stdout when omitted");

  // dimacs
  CLI::App* dimacs =
      app.add_subcommand("dimacs", "Convert a DIMACS .gr file to an interval "
                                   "instance");
  std::string gr_path;
  std::string dimacs_out;
  std::uint64_t perturb_seed = 0;
  int source = 1;
  int target = -1;
  dimacs->add_option("--input", gr_path, "DIMACS .gr file")->required();
  dimacs->add_option("--seed", perturb_seed, "Perturbation seed")
      ->capture_default_str();
  dimacs->add_option("--source", source, "Source node (1-based)")
      ->capture_default_str();
  dimacs->add_option("--target", target, "Target node (1-based); last node "
                                         "when omitted");
  dimacs->add_option("--out", dimacs_out, "Output path; stdout when omitted");

  // verify
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check solvers against enumeration");
  SpecFlags verify_spec;
  verify_spec.Register(verify, 7);
  std::size_t path_limit = 400;
  verify->add_option("--path-limit", path_limit,
                     "Refuse instances with more s-t paths")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      GeneratorSpec spec = gen_spec.Resolved();
      if (gen_spec.count > 1 && gen_out.empty()) {
        throw std::runtime_error("--out DIR is required with --count > 1");
      }
      if (gen_spec.count > 1) std::filesystem::create_directories(gen_out);
      for (int k = 0; k < gen_spec.count; ++k, ++spec.seed) {
        const std::string text = WriteNative(GenerateInstance(spec));
        if (gen_out.empty()) {
          std::cout << text;
        } else if (gen_spec.count == 1) {
          WriteFile(gen_out, text);
        } else {
          WriteFile((std::filesystem::path(gen_out) / InstanceName(spec)).string(),
                    text);
        }
      }
    } else if (lb->parsed()) {
      lb_config.spec = lb_spec.Resolved();
      lb_config.count = lb_spec.count;
      lb_config.bounds.clear();
      for (const auto& n : lb_names) {
        if (n == "all") {
          lb_config.bounds = LbExperimentConfig{}.bounds;
          break;
        }
        lb_config.bounds.push_back(n);
      }
      std::vector<ExperimentRow> rows;
      if (lb_inputs.empty()) {
        rows = RunLbExperiment(lb_config);
      } else {
        std::vector<IntervalDigraph> graphs;
        for (const auto& p : lb_inputs) graphs.push_back(ReadNative(ReadFile(p)));
        rows = RunLbExperiment(graphs, lb_config);
      }
      WithOutput(lb_out, [&](std::ostream& out) { WriteLbCsv(out, rows); });
    } else if (bb->parsed()) {
      bb_config.spec = bb_spec.Resolved();
      bb_config.count = bb_spec.count;
      bb_config.strategies = Strategies(bb_names);
      bb_config.bb.warm_start = !cold_start;
      std::vector<BbRow> rows;
      if (bb_inputs.empty()) {
        rows = RunBbExperiment(bb_config);
      } else {
        for (const auto& p : bb_inputs) {
          auto r = RunBbExperiment(ReadNative(ReadFile(p)), p,
                                   bb_config.strategies, bb_config.bb);
          rows.insert(rows.end(), r.begin(), r.end());
        }
      }
      WithOutput(bb_out, [&](std::ostream& out) { WriteBbCsv(out, rows); });
    } else if (dimacs->parsed()) {
      const ScalarGraph g = ParseDimacs(ReadFile(gr_path));
      if (target < 0) target = g.node_count;
      const std::string text = WriteNative(
          PerturbIntervals(g, source - 1, target - 1, perturb_seed));
      if (dimacs_out.empty()) {
        std::cout << text;
      } else {
        WriteFile(dimacs_out, text);
      }
    } else if (verify->parsed()) {
      GeneratorSpec spec = verify_spec.Resolved();
      int failed = 0;
      for (int k = 0; k < verify_spec.count; ++k, ++spec.seed) {
        const VerifyReport r = Verify(GenerateInstance(spec), path_limit);
        if (r.ok()) continue;
        ++failed;
        for (const auto& f : r.failures) {
          std::cout << "seed " << spec.seed << ": " << f << "\n";
        }
      }
      std::cout << (verify_spec.count - failed) << "/" << verify_spec.count
                << " instances verified\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
