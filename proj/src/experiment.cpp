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

#include "d2dee/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>
#include <memory>
#include <sstream>

#include <fmt/format.h>

#include "d2dee/baselines.hpp"
#include "d2dee/rng.hpp"
#include "d2dee/topology.hpp"

#ifndef D2DEE_VERSION
#define D2DEE_VERSION "unknown"
#endif

namespace d2dee {
namespace {

std::unique_ptr<ResponseRule> MakeRule(Algorithm algorithm, std::uint64_t run_seed) {
  switch (algorithm) {
    case Algorithm::kEnergyEfficient:
      return std::make_unique<EnergyEfficientRule>();
    case Algorithm::kSpectralEfficient:
      return std::make_unique<SpectralEfficientRule>();
    case Algorithm::kRandom:
      return std::make_unique<RandomRule>(Mix64(run_seed ^ kRandomStreamTag));
  }
  throw ConfigError("algorithms", "unhandled algorithm");
}

int CountInfeasible(const std::vector<bool>& flags) {
  return static_cast<int>(std::count(flags.begin(), flags.end(), false));
}

AlgorithmRun Summarize(Algorithm algorithm, GameTrace trace, int num_rounds, bool keep_trace) {
  AlgorithmRun run;
  run.algorithm = algorithm;
  for (const auto& record : trace.rounds) {
    run.mean_d2d_ee.push_back(record.mean_d2d_ee());
    run.mean_cell_ee.push_back(record.mean_cell_ee());
  }
  // A settled game keeps its final profile for the remaining rounds.
  while (static_cast<int>(run.mean_d2d_ee.size()) < num_rounds) {
    run.mean_d2d_ee.push_back(run.mean_d2d_ee.back());
    run.mean_cell_ee.push_back(run.mean_cell_ee.back());
  }
  run.converged_round = trace.converged_round;
  run.d2d_outages = CountInfeasible(trace.rounds.back().d2d_feasible);
  run.cell_outages = CountInfeasible(trace.rounds.back().cell_feasible);
  if (keep_trace) run.trace = std::move(trace);
  return run;
}

double Peak(const std::vector<double>& curve) {
  return curve.empty() ? 0.0 : *std::max_element(curve.begin(), curve.end());
}

std::vector<double> Scaled(const std::vector<double>& curve, double divisor) {
  std::vector<double> out(curve.size());
  for (std::size_t t = 0; t < curve.size(); ++t) out[t] = curve[t] / divisor;
  return out;
}

}  // namespace

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kEnergyEfficient: return "energy_efficient";
    case Algorithm::kSpectralEfficient: return "spectral_efficient";
    case Algorithm::kRandom: return "random";
  }
  return "unknown";
}

Algorithm AlgorithmFromString(const std::string& name) {
  if (name == "energy_efficient") return Algorithm::kEnergyEfficient;
  if (name == "spectral_efficient") return Algorithm::kSpectralEfficient;
  if (name == "random") return Algorithm::kRandom;
  throw ConfigError("algorithms", "unknown algorithm '" + name + "'");
}

std::vector<Algorithm> ParseAlgorithmList(const std::string& list) {
  std::vector<Algorithm> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(AlgorithmFromString(item));
  }
  if (out.empty()) throw ConfigError("algorithms", "at least one algorithm required");
  return out;
}

void ExperimentSpec::Validate() const {
  scenario.Validate();
  game.Validate();
  if (num_runs < 1) throw ConfigError("experiment.num_runs", "must be >= 1");
  if (algorithms.empty()) throw ConfigError("experiment.algorithms", "at least one required");
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    for (std::size_t b = a + 1; b < algorithms.size(); ++b) {
      if (algorithms[a] == algorithms[b]) {
        throw ConfigError("experiment.algorithms", "duplicate " + ToString(algorithms[a]));
      }
    }
  }
  if (workers < 1) throw ConfigError("experiment.workers", "must be >= 1");
}

ExperimentSpec ExperimentSpecFromJson(const Json& doc) {
  ExperimentSpec spec;
  if (!doc.is_object()) throw ConfigError("config", "expected an object");
  bool seed_given = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "scenario") {
      spec.scenario = ScenarioConfigFromJson(value);
    } else if (key == "game") {
      spec.game = GameConfigFromJson(value);
    } else if (key == "experiment") {
      if (!value.is_object()) throw ConfigError("experiment", "expected an object");
      for (const auto& [ek, ev] : value.items()) {
        const std::string field = "experiment." + ek;
        try {
          if (ek == "num_runs") {
            spec.num_runs = ev.get<int>();
          } else if (ek == "algorithms") {
            if (ev.is_string()) {
              spec.algorithms = ParseAlgorithmList(ev.get<std::string>());
            } else {
              spec.algorithms.clear();
              for (const auto& a : ev) spec.algorithms.push_back(AlgorithmFromString(a.get<std::string>()));
            }
          } else if (ek == "master_seed") {
            spec.master_seed = ev.get<std::uint64_t>();
            seed_given = true;
          } else if (ek == "out_dir") {
            spec.out_dir = ev.get<std::string>();
          } else if (ek == "workers") {
            spec.workers = ev.get<int>();
          } else if (ek == "verbose") {
            spec.verbose = ev.get<bool>();
          } else {
            throw ConfigError(field, "unknown key");
          }
        } catch (const Json::exception& e) {
          throw ConfigError(field, e.what());
        }
      }
    } else {
      throw ConfigError(key, "unknown section");
    }
  }
  if (!seed_given) spec.master_seed = spec.scenario.seed;
  return spec;
}

Json ToJson(const ExperimentSpec& spec) {
  Json algorithms = Json::array();
  for (Algorithm a : spec.algorithms) algorithms.push_back(ToString(a));
  // Execution settings (workers, out_dir) do not influence results and are
  // left out so that outputs compare byte for byte across them.
  return Json{{"scenario", ToJson(spec.scenario)},
              {"game", ToJson(spec.game)},
              {"experiment",
               Json{{"num_runs", spec.num_runs},
                    {"algorithms", std::move(algorithms)},
                    {"master_seed", spec.master_seed},
                    {"verbose", spec.verbose}}}};
}

RunRecord SimulateRun(const ExperimentSpec& spec, int run_index) {
  RunRecord record;
  record.run_index = run_index;
  record.seed = ChildSeed(spec.master_seed, static_cast<std::uint64_t>(run_index));
  Rng rng(record.seed);
  const Topology topo = GenerateTopology(spec.scenario, rng);
  const int num_rounds = spec.game.max_rounds + 1;
  for (Algorithm algorithm : spec.algorithms) {
    auto rule = MakeRule(algorithm, record.seed);
    GameTrace trace = RunGame(topo, spec.scenario, spec.game, *rule);
    record.algorithms.push_back(Summarize(algorithm, std::move(trace), num_rounds, spec.verbose));
  }
  return record;
}

std::vector<RunRecord> SimulateRunsSerial(const ExperimentSpec& spec) {
  std::vector<RunRecord> runs;
  runs.reserve(spec.num_runs);
  for (int r = 0; r < spec.num_runs; ++r) runs.push_back(SimulateRun(spec, r));
  return runs;
}

std::vector<RunRecord> SimulateRunsParallel(const ExperimentSpec& spec, int workers) {
  std::vector<RunRecord> runs(spec.num_runs);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int r = 0; r < spec.num_runs; ++r) {
    try {
      runs[r] = SimulateRun(spec, r);
    } catch (...) {
#pragma omp critical(d2dee_run_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return runs;
}

const AlgorithmCurves* AggregateResult::find(Algorithm algorithm) const {
  for (const auto& c : curves) {
    if (c.algorithm == algorithm) return &c;
  }
  return nullptr;
}

AggregateResult Aggregate(const ExperimentSpec& spec, const std::vector<RunRecord>& runs) {
  AggregateResult result;
  result.num_rounds = spec.game.max_rounds + 1;
  const double count = static_cast<double>(runs.size());
  for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
    AlgorithmCurves curves;
    curves.algorithm = spec.algorithms[a];
    curves.mean_d2d_ee.assign(result.num_rounds, 0.0);
    curves.mean_cell_ee.assign(result.num_rounds, 0.0);
    for (const auto& run : runs) {
      const AlgorithmRun& ar = run.algorithms[a];
      for (int t = 0; t < result.num_rounds; ++t) {
        curves.mean_d2d_ee[t] += ar.mean_d2d_ee[t];
        curves.mean_cell_ee[t] += ar.mean_cell_ee[t];
      }
      curves.converged_rounds.push_back(ar.converged_round.value_or(-1));
      curves.d2d_outages.push_back(ar.d2d_outages);
      curves.cell_outages.push_back(ar.cell_outages);
    }
    for (int t = 0; t < result.num_rounds; ++t) {
      curves.mean_d2d_ee[t] /= count;
      curves.mean_cell_ee[t] /= count;
    }
    result.curves.push_back(std::move(curves));
  }

  const AlgorithmCurves* reference = result.find(Algorithm::kEnergyEfficient);
  if (reference == nullptr) reference = &result.curves.front();
  result.normalization_source = "max over rounds of " + ToString(reference->algorithm) +
                                " mean D2D EE";
  const double peak = Peak(reference->mean_d2d_ee);
  result.normalization_divisor = peak > 0.0 ? peak : 1.0;
  for (auto& c : result.curves) {
    c.norm_d2d_ee = Scaled(c.mean_d2d_ee, result.normalization_divisor);
    c.norm_cell_ee = Scaled(c.mean_cell_ee, result.normalization_divisor);
  }
  return result;
}

ExperimentOutput RunExperiment(const ExperimentSpec& spec) {
  spec.Validate();
  ExperimentOutput out;
  out.runs = spec.workers <= 1 ? SimulateRunsSerial(spec) : SimulateRunsParallel(spec, spec.workers);
  out.aggregate = Aggregate(spec, out.runs);
  return out;
}

void PrepareOutputDir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto probe = dir / ".write_probe";
  {
    std::ofstream out(probe);
    if (!out) throw IoError("output directory not writable: " + dir.string());
  }
  std::filesystem::remove(probe, ec);
}

std::string CurvesCsv(const AggregateResult& result) {
  std::string csv = "algorithm,round,mean_d2d_ee,mean_cell_ee,norm_d2d_ee,norm_cell_ee\n";
  for (const auto& c : result.curves) {
    for (int t = 0; t < result.num_rounds; ++t) {
      csv += fmt::format("{},{},{},{},{},{}\n", ToString(c.algorithm), t, c.mean_d2d_ee[t],
                         c.mean_cell_ee[t], c.norm_d2d_ee[t], c.norm_cell_ee[t]);
    }
  }
  return csv;
}

Json Metadata(const AggregateResult& result, const ExperimentSpec& spec,
              const std::vector<RunRecord>& runs) {
  Json per_algorithm = Json::object();
  for (const auto& c : result.curves) {
    per_algorithm[ToString(c.algorithm)] = Json{{"converged_rounds", c.converged_rounds},
                                                {"d2d_outages", c.d2d_outages},
                                                {"cell_outages", c.cell_outages}};
  }
  Json seeds = Json::array();
  for (const auto& run : runs) seeds.push_back(run.seed);
  return Json{
      {"version", VersionString()},
      {"spec", ToJson(spec)},
      {"rng", std::string(Rng::kName)},
      {"seed_derivation", "run r uses Mix64(master_seed ^ Mix64(r)) with the SplitMix64 finalizer"},
      {"random_rule", kRandomRuleDescription},
      {"round_padding", "converged games hold their final profile up to max_rounds"},
      {"normalization",
       Json{{"divisor", result.normalization_divisor}, {"source", result.normalization_source}}},
      {"run_seeds", std::move(seeds)},
      {"runs", std::move(per_algorithm)}};
}

void EmitOutputs(const ExperimentOutput& output, const ExperimentSpec& spec) {
  const auto csv_path = spec.out_dir / "curves.csv";
  {
    std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
    if (!csv) throw IoError("cannot write " + csv_path.string());
    csv << CurvesCsv(output.aggregate);
    if (!csv) throw IoError("write failed: " + csv_path.string());
  }
  WriteJsonFile(spec.out_dir / "metadata.json", Metadata(output.aggregate, spec, output.runs));
  if (!spec.verbose) return;

  const auto trace_path = spec.out_dir / "traces.jsonl";
  std::ofstream traces(trace_path, std::ios::binary | std::ios::trunc);
  if (!traces) throw IoError("cannot write " + trace_path.string());
  for (const auto& run : output.runs) {
    for (const auto& ar : run.algorithms) {
      if (!ar.trace) continue;
      Json line{{"run", run.run_index}, {"seed", run.seed}, {"algorithm", ToString(ar.algorithm)},
                {"trace", ToJson(*ar.trace)}};
      traces << line.dump() << '\n';
    }
  }
  if (!traces) throw IoError("write failed: " + trace_path.string());
}

std::string VersionString() { return D2DEE_VERSION; }

}  // namespace d2dee
