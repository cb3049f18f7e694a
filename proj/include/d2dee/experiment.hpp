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

// Monte Carlo experiment: many random topologies, each played out as a game
// under every requested response rule, then averaged per game round.
//
// Run r draws its topology from ChildSeed(master_seed, r); the random
// baseline of that run uses Mix64(child ^ kRandomStreamTag). Runs share no
// state, so the OpenMP runner and the serial reference produce identical
// per-run records, and aggregation always reduces in run-index order.

#ifndef D2DEE_EXPERIMENT_HPP
#define D2DEE_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "d2dee/config.hpp"
#include "d2dee/game.hpp"
#include "d2dee/serialization.hpp"

namespace d2dee {

enum class Algorithm { kEnergyEfficient, kSpectralEfficient, kRandom };

std::string ToString(Algorithm algorithm);
Algorithm AlgorithmFromString(const std::string& name);
// Comma-separated list, e.g. "energy_efficient,random".
std::vector<Algorithm> ParseAlgorithmList(const std::string& list);

inline constexpr std::uint64_t kRandomStreamTag = 0x52414E444F4D2D31ULL;  // "RANDOM-1"

struct ExperimentSpec {
  ScenarioConfig scenario;
  GameConfig game;
  int num_runs = 1000;
  std::vector<Algorithm> algorithms = {Algorithm::kEnergyEfficient,
                                       Algorithm::kSpectralEfficient, Algorithm::kRandom};
  std::uint64_t master_seed = 0;
  std::filesystem::path out_dir = "out";
  int workers = 1;
  bool verbose = false;

  void Validate() const;
};

// Config document: {"scenario": {...}, "game": {...}, "experiment": {...}}.
// The experiment section accepts num_runs, algorithms (list or
// comma-separated string), master_seed, out_dir, workers and verbose.
ExperimentSpec ExperimentSpecFromJson(const Json& doc);
Json ToJson(const ExperimentSpec& spec);

// One algorithm's game on one topology, padded to max_rounds + 1 rounds by
// holding the final profile after convergence.
struct AlgorithmRun {
  Algorithm algorithm = Algorithm::kEnergyEfficient;
  std::vector<double> mean_d2d_ee;   // per round
  std::vector<double> mean_cell_ee;  // per round
  std::optional<int> converged_round;
  int d2d_outages = 0;   // at the final round
  int cell_outages = 0;
  std::optional<GameTrace> trace;  // kept when spec.verbose
};

struct RunRecord {
  int run_index = 0;
  std::uint64_t seed = 0;
  std::vector<AlgorithmRun> algorithms;  // in spec.algorithms order
};

RunRecord SimulateRun(const ExperimentSpec& spec, int run_index);

// Reference implementation: runs executed one after another.
std::vector<RunRecord> SimulateRunsSerial(const ExperimentSpec& spec);
// OpenMP fan-out over runs with `workers` threads.
std::vector<RunRecord> SimulateRunsParallel(const ExperimentSpec& spec, int workers);

struct AlgorithmCurves {
  Algorithm algorithm = Algorithm::kEnergyEfficient;
  std::vector<double> mean_d2d_ee;
  std::vector<double> mean_cell_ee;
  std::vector<double> norm_d2d_ee;
  std::vector<double> norm_cell_ee;
  std::vector<int> converged_rounds;  // -1 when the run did not converge
  std::vector<int> d2d_outages;
  std::vector<int> cell_outages;
};

struct AggregateResult {
  std::vector<AlgorithmCurves> curves;  // in spec.algorithms order
  int num_rounds = 0;                   // max_rounds + 1
  double normalization_divisor = 1.0;
  std::string normalization_source;

  const AlgorithmCurves* find(Algorithm algorithm) const;
};

// Means over runs per round, then every curve divided by the peak of the
// energy-efficient D2D mean (or of the first listed algorithm's D2D mean
// when energy_efficient was not run).
AggregateResult Aggregate(const ExperimentSpec& spec, const std::vector<RunRecord>& runs);

struct ExperimentOutput {
  AggregateResult aggregate;
  std::vector<RunRecord> runs;
};

// Simulates (serial when workers <= 1, OpenMP otherwise) and aggregates.
ExperimentOutput RunExperiment(const ExperimentSpec& spec);

// Creates `dir` and verifies it is writable; throws IoError otherwise.
void PrepareOutputDir(const std::filesystem::path& dir);

std::string CurvesCsv(const AggregateResult& result);
Json Metadata(const AggregateResult& result, const ExperimentSpec& spec,
              const std::vector<RunRecord>& runs);

// curves.csv, metadata.json and, with spec.verbose, traces.jsonl.
void EmitOutputs(const ExperimentOutput& output, const ExperimentSpec& spec);

// Version string baked in at configure time (git describe).
std::string VersionString();

}  // namespace d2dee

#endif  // D2DEE_EXPERIMENT_HPP
