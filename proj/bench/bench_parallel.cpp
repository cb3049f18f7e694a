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


// Serial reference kernels against their OpenMP counterparts: the Monte Carlo
// run loop and the two-channel oracle grid.

#include <benchmark/benchmark.h>

#include "d2dee/experiment.hpp"
#include "d2dee/oracle.hpp"

namespace d2dee {
namespace {

ExperimentSpec BenchSpec() {
  ExperimentSpec spec;
  spec.num_runs = 64;
  spec.master_seed = 1;
  return spec;
}

void BM_RunsSerial(benchmark::State& state) {
  const ExperimentSpec spec = BenchSpec();
  for (auto _ : state) benchmark::DoNotOptimize(SimulateRunsSerial(spec));
  state.SetItemsProcessed(state.iterations() * spec.num_runs);
}
BENCHMARK(BM_RunsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_RunsParallel(benchmark::State& state) {
  const ExperimentSpec spec = BenchSpec();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SimulateRunsParallel(spec, workers));
  state.SetItemsProcessed(state.iterations() * spec.num_runs);
}
BENCHMARK(BM_RunsParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

FrozenLink BenchLink() {
  Rng rng(9);
  return RandomD2DLink(ScenarioConfig{}, 2, rng);
}

void BM_GridSerial(benchmark::State& state) {
  const FrozenLink link = BenchLink();
  const LinkLimits lim = D2DLimits(ScenarioConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(GridSearchEe2Serial(link, lim, 1e-4));
}
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GridParallel(benchmark::State& state) {
  const FrozenLink link = BenchLink();
  const LinkLimits lim = D2DLimits(ScenarioConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(GridSearchEe2Parallel(link, lim, 1e-4));
}
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace d2dee

BENCHMARK_MAIN();
