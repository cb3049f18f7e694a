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

#include "d2dee/baselines.hpp"

namespace d2dee {
namespace {

BestResponse Evaluate(std::vector<double> powers, const FrozenLink& link, const LinkLimits& limits) {
  BestResponse out;
  out.feasible = QosAttainable(link, limits);
  out.q_star = EnergyEfficiency(LinkRate(link, powers), LinkPowerTotal(limits, powers));
  out.powers = std::move(powers);
  out.converged = true;
  return out;
}

}  // namespace

BestResponse SpectralEfficientResponseD2D(int i, const PowerAllocation& alloc,
                                          const Topology& topo, const ScenarioConfig& config) {
  const FrozenLink link = FreezeD2D(i, alloc, topo, config.noise_power);
  return Evaluate(RateMaxPowers(link, config.p_d2d_max), link, D2DLimits(config));
}

BestResponse SpectralEfficientResponseCellular(int k, const PowerAllocation& alloc,
                                               const Topology& topo, const ScenarioConfig& config) {
  const FrozenLink link = FreezeCellular(k, alloc, topo, config.noise_power);
  return Evaluate({config.p_cell_max}, link, CellularLimits(config));
}

std::vector<double> RandomResponseD2D(const ScenarioConfig& config, int num_channels, Rng& rng) {
  const double total = config.p_d2d_max * rng.Uniform();
  std::vector<double> weights(num_channels);
  double sum = 0.0;
  for (auto& w : weights) {
    w = rng.Exponential();
    sum += w;
  }
  for (auto& w : weights) w = total * (w / sum);
  return weights;
}

double RandomResponseCellular(const ScenarioConfig& config, Rng& rng) {
  return config.p_cell_max * rng.Uniform();
}

BestResponse RandomRule::RespondD2D(int i, const PowerAllocation& alloc, const Topology& topo,
                                    const ScenarioConfig& config) {
  const FrozenLink link = FreezeD2D(i, alloc, topo, config.noise_power);
  return Evaluate(RandomResponseD2D(config, topo.num_channels(), rng_), link, D2DLimits(config));
}

BestResponse RandomRule::RespondCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                                         const ScenarioConfig& config) {
  const FrozenLink link = FreezeCellular(k, alloc, topo, config.noise_power);
  return Evaluate({RandomResponseCellular(config, rng_)}, link, CellularLimits(config));
}

}  // namespace d2dee
