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


#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "doctest.h"

#include "d2dee/baselines.hpp"
#include "d2dee/experiment.hpp"
#include "test_util.hpp"

namespace d2dee {
namespace {

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ExperimentSpec SmallSpec(int runs) {
  ExperimentSpec spec;
  spec.num_runs = runs;
  spec.master_seed = 2026;
  return spec;
}

TEST_CASE("algorithm names") {
  for (Algorithm a : {Algorithm::kEnergyEfficient, Algorithm::kSpectralEfficient, Algorithm::kRandom}) {
    CHECK(AlgorithmFromString(ToString(a)) == a);
  }
  CHECK(ParseAlgorithmList("random,energy_efficient") ==
        std::vector<Algorithm>{Algorithm::kRandom, Algorithm::kEnergyEfficient});
  CHECK_THROWS_AS(ParseAlgorithmList(""), ConfigError);
  CHECK_THROWS_AS(ParseAlgorithmList("greedy"), ConfigError);
}

TEST_CASE("spec validation") {
  ExperimentSpec spec;
  CHECK_NOTHROW(spec.Validate());
  spec.num_runs = 0;
  CHECK_THROWS_AS(spec.Validate(), ConfigError);
  spec = {};
  spec.algorithms.clear();
  CHECK_THROWS_AS(spec.Validate(), ConfigError);
  spec = {};
  spec.algorithms = {Algorithm::kRandom, Algorithm::kRandom};
  CHECK_THROWS_AS(spec.Validate(), ConfigError);
  spec = {};
  spec.workers = 0;
  CHECK_THROWS_AS(spec.Validate(), ConfigError);
}

TEST_CASE("config documents") {
  const Json doc = Json::parse(R"({
    "scenario": {"num_d2d_pairs": 4, "seed": 9},
    "game": {"max_rounds": 6},
    "experiment": {"num_runs": 20, "algorithms": "energy_efficient,random", "workers": 2}
  })");
  const ExperimentSpec spec = ExperimentSpecFromJson(doc);
  CHECK(spec.scenario.num_d2d_pairs == 4);
  CHECK(spec.game.max_rounds == 6);
  CHECK(spec.num_runs == 20);
  CHECK(spec.algorithms.size() == 2);
  CHECK(spec.workers == 2);
  CHECK(spec.master_seed == 9);  // falls back to the scenario seed

  CHECK_THROWS_AS(ExperimentSpecFromJson(Json::parse(R"({"experimnt": {}})")), ConfigError);
  CHECK_THROWS_AS(ExperimentSpecFromJson(Json::parse(R"({"experiment": {"runs": 3}})")),
                  ConfigError);

  const ExperimentSpec back = ExperimentSpecFromJson(ToJson(spec));
  CHECK(ToJson(back).dump() == ToJson(spec).dump());
}

TEST_CASE("one run reproduces its game traces") {
  ExperimentSpec spec = SmallSpec(1);
  const ExperimentOutput out = RunExperiment(spec);
  const auto& agg = out.aggregate;
  CHECK(agg.num_rounds == spec.game.max_rounds + 1);

  // Replay the run by hand.
  const std::uint64_t seed = ChildSeed(spec.master_seed, 0);
  Rng rng(seed);
  const Topology topo = GenerateTopology(spec.scenario, rng);
  EnergyEfficientRule ee;
  const GameTrace trace = RunGame(topo, spec.scenario, spec.game, ee);
  const AlgorithmCurves& curves = *agg.find(Algorithm::kEnergyEfficient);
  for (int t = 0; t < agg.num_rounds; ++t) {
    const auto& round = trace.rounds[std::min<std::size_t>(t, trace.rounds.size() - 1)];
    CHECK(curves.mean_d2d_ee[t] == round.mean_d2d_ee());
    CHECK(curves.mean_cell_ee[t] == round.mean_cell_ee());
    CHECK(curves.norm_d2d_ee[t] == round.mean_d2d_ee() / agg.normalization_divisor);
  }

  RandomRule random(Mix64(seed ^ kRandomStreamTag));
  const GameTrace rtrace = RunGame(topo, spec.scenario, spec.game, random);
  CHECK(agg.find(Algorithm::kRandom)->mean_d2d_ee[1] == rtrace.rounds[1].mean_d2d_ee());
}

TEST_CASE("normalized energy-efficient D2D curve peaks at exactly 1") {
  const ExperimentOutput out = RunExperiment(SmallSpec(40));
  const auto& curves = *out.aggregate.find(Algorithm::kEnergyEfficient);
  CHECK(*std::max_element(curves.norm_d2d_ee.begin(), curves.norm_d2d_ee.end()) == 1.0);
  for (const auto& c : out.aggregate.curves) {
    for (double v : c.norm_d2d_ee) CHECK(v >= 0.0);
  }
}

TEST_CASE("normalization falls back to the first algorithm") {
  ExperimentSpec spec = SmallSpec(5);
  spec.algorithms = {Algorithm::kSpectralEfficient, Algorithm::kRandom};
  const ExperimentOutput out = RunExperiment(spec);
  const auto& se = out.aggregate.curves[0];
  CHECK(out.aggregate.normalization_divisor ==
        *std::max_element(se.mean_d2d_ee.begin(), se.mean_d2d_ee.end()));
  CHECK(out.aggregate.normalization_source.find("spectral_efficient") != std::string::npos);
}

TEST_CASE("parallel runs equal serial runs") {
  const ExperimentSpec spec = SmallSpec(24);
  const auto serial = SimulateRunsSerial(spec);
  const auto parallel = SimulateRunsParallel(spec, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t r = 0; r < serial.size(); ++r) {
    CHECK(serial[r].seed == parallel[r].seed);
    for (std::size_t a = 0; a < serial[r].algorithms.size(); ++a) {
      CHECK(serial[r].algorithms[a].mean_d2d_ee == parallel[r].algorithms[a].mean_d2d_ee);
      CHECK(serial[r].algorithms[a].mean_cell_ee == parallel[r].algorithms[a].mean_cell_ee);
      CHECK(serial[r].algorithms[a].converged_round == parallel[r].algorithms[a].converged_round);
    }
  }
}

TEST_CASE("CSV layout") {
  const ExperimentSpec spec = SmallSpec(3);
  const std::string csv = CurvesCsv(RunExperiment(spec).aggregate);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "algorithm,round,mean_d2d_ee,mean_cell_ee,norm_d2d_ee,norm_cell_ee");
  const auto rows = std::count(csv.begin(), csv.end(), '\n') - 1;
  CHECK(rows == 3 * (spec.game.max_rounds + 1));
  std::string first;
  std::getline(lines, first);
  CHECK(first.rfind("energy_efficient,0,", 0) == 0);
}

TEST_CASE("emitted files are reproducible and carry metadata") {
  const auto root = testing::ScratchDir("experiment_emit");
  ExperimentSpec spec = SmallSpec(10);
  spec.verbose = true;
  for (const char* name : {"a", "b"}) {
    spec.out_dir = root / name;
    PrepareOutputDir(spec.out_dir);
    EmitOutputs(RunExperiment(spec), spec);
  }
  CHECK(Slurp(root / "a" / "curves.csv") == Slurp(root / "b" / "curves.csv"));
  CHECK(Slurp(root / "a" / "metadata.json") == Slurp(root / "b" / "metadata.json"));

  const Json meta = ReadJsonFile(root / "a" / "metadata.json");
  CHECK(meta.at("version").get<std::string>() == VersionString());
  CHECK(meta.at("spec").at("experiment").at("num_runs") == 10);
  CHECK(meta.at("runs").at("energy_efficient").at("converged_rounds").size() == 10);
  CHECK(meta.at("normalization").at("divisor").get<double>() > 0.0);
  CHECK(meta.at("random_rule") == kRandomRuleDescription);

  const std::string traces = Slurp(root / "a" / "traces.jsonl");
  CHECK(std::count(traces.begin(), traces.end(), '\n') == 10 * 3);
}

TEST_CASE("unwritable output directory fails before running") {
  const auto root = testing::ScratchDir("experiment_io");
  std::ofstream(root / "file") << "x";
  CHECK_THROWS_AS(PrepareOutputDir(root / "file" / "out"), IoError);
}

}  // namespace
}  // namespace d2dee
