// Copyright 2026 The d2dee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// d2dee command line: run experiments, check configs, run the oracle suite.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "d2dee/experiment.hpp"
#include "d2dee/oracle.hpp"

namespace {

using d2dee::ExperimentSpec;

struct Overrides {
  std::string config;
  std::optional<int> runs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> algorithms;
  std::optional<std::string> out;
  std::optional<int> workers;
  bool verbose = false;
};

ExperimentSpec ResolveSpec(const Overrides& o) {
  ExperimentSpec spec;
  if (!o.config.empty()) spec = d2dee::ExperimentSpecFromJson(d2dee::ReadJsonFile(o.config));
  if (o.runs) spec.num_runs = *o.runs;
  if (o.seed) spec.master_seed = *o.seed;
  if (o.algorithms) spec.algorithms = d2dee::ParseAlgorithmList(*o.algorithms);
  if (o.out) spec.out_dir = *o.out;
  if (o.workers) spec.workers = *o.workers;
  if (o.verbose) spec.verbose = true;
  spec.Validate();
  return spec;
}

// Median converged round; runs that never settled rank after every round.
std::string MedianRound(std::vector<int> v, int max_rounds) {
  for (int& r : v) r = r < 0 ? max_rounds + 1 : r;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  const double median = v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
  return median > max_rounds ? "none" : fmt::format("{}", median);
}

int Run(const Overrides& o) {
  const ExperimentSpec spec = ResolveSpec(o);
  d2dee::PrepareOutputDir(spec.out_dir);
  const auto output = d2dee::RunExperiment(spec);
  d2dee::EmitOutputs(output, spec);

  const auto& agg = output.aggregate;
  const int last = agg.num_rounds - 1;
  fmt::print("{} runs, {} rounds, divisor {:.6g} ({})\n", spec.num_runs, agg.num_rounds,
             agg.normalization_divisor, agg.normalization_source);
  for (const auto& c : agg.curves) {
    fmt::print("  {:<19} final d2d_ee {:>10.4f}  cell_ee {:>9.4f}  median converged round {}\n",
               d2dee::ToString(c.algorithm), c.mean_d2d_ee[last], c.mean_cell_ee[last],
               MedianRound(c.converged_rounds, spec.game.max_rounds));
  }
  fmt::print("wrote {}\n", spec.out_dir.string());
  return 0;
}

int Check(const Overrides& o) {
  const ExperimentSpec spec = ResolveSpec(o);
  d2dee::Json doc = d2dee::ToJson(spec);
  doc["execution"] = {{"out_dir", spec.out_dir.string()}, {"workers", spec.workers}};
  std::cout << doc.dump(2) << '\n';
  return 0;
}

int Oracle(std::uint64_t seed, int cellular, int d2d) {
  const d2dee::ScenarioConfig config;
  const auto report = d2dee::RunOracleSuite(config, seed, cellular, d2d);
  fmt::print("cellular: {} instances vs bisection, max relative error {:.3e} ({} draws skipped)\n",
             report.cellular.size(), report.max_cellular_error, report.cellular_rejected);
  fmt::print("d2d:      {} instances vs 2-channel grid, max relative error {:.3e}\n",
             report.d2d.size(), report.max_d2d_error);
  fmt::print("{}\n", report.passes ? "PASS" : "FAIL");
  return report.passes ? 0 : 1;
}

void AddSpecOptions(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--runs", o.runs, "Monte Carlo runs");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--algorithms", o.algorithms,
                  "comma-separated subset of energy_efficient,spectral_efficient,random");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--workers", o.workers, "OpenMP worker threads");
  cmd->add_flag("--verbose", o.verbose, "also write per-run game traces");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-efficient D2D underlay resource allocation simulator"};
  app.set_version_flag("--version", d2dee::VersionString());
  app.require_subcommand(1);

  Overrides run_opts;
  auto* run = app.add_subcommand("run", "run a Monte Carlo experiment");
  AddSpecOptions(run, run_opts);

  Overrides check_opts;
  auto* check = app.add_subcommand("check", "validate a config and print resolved values");
  AddSpecOptions(check, check_opts);

  std::uint64_t oracle_seed = 1;
  int oracle_cellular = 100;
  int oracle_d2d = 50;
  auto* oracle = app.add_subcommand("oracle", "compare solvers against brute-force oracles");
  oracle->add_option("--seed", oracle_seed, "instance seed");
  oracle->add_option("--cellular", oracle_cellular, "single-link cellular instances");
  oracle->add_option("--d2d", oracle_d2d, "two-channel D2D instances");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return Run(run_opts);
    if (*check) return Check(check_opts);
    if (*oracle) return Oracle(oracle_seed, oracle_cellular, oracle_d2d);
  } catch (const d2dee::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const d2dee::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
