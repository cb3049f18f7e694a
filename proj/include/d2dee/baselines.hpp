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

#ifndef D2DEE_BASELINES_HPP
#define D2DEE_BASELINES_HPP

#include <string>
#include <vector>

#include "d2dee/game.hpp"
#include "d2dee/rng.hpp"

namespace d2dee {

// Rate maximization ignoring power cost: water-filling that spends the whole
// budget. In outage the same allocation is returned with feasible = false.
BestResponse SpectralEfficientResponseD2D(int i, const PowerAllocation& alloc,
                                          const Topology& topo, const ScenarioConfig& config);
BestResponse SpectralEfficientResponseCellular(int k, const PowerAllocation& alloc,
                                               const Topology& topo, const ScenarioConfig& config);

// Total power ~ U[0, p_max], split over channels with flat Dirichlet weights.
std::vector<double> RandomResponseD2D(const ScenarioConfig& config, int num_channels, Rng& rng);
// Power ~ U[0, p_max].
double RandomResponseCellular(const ScenarioConfig& config, Rng& rng);

// Human-readable description recorded in experiment metadata.
inline constexpr const char* kRandomRuleDescription =
    "total power ~ U[0, p_max]; D2D split over channels by Dirichlet(1,...,1) "
    "weights (normalized Exp(1) draws); cellular power ~ U[0, p_max]; redrawn "
    "every response";

class SpectralEfficientRule : public ResponseRule {
 public:
  std::string name() const override { return "spectral_efficient"; }
  BestResponse RespondD2D(int i, const PowerAllocation& alloc, const Topology& topo,
                          const ScenarioConfig& config) override {
    return SpectralEfficientResponseD2D(i, alloc, topo, config);
  }
  BestResponse RespondCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                               const ScenarioConfig& config) override {
    return SpectralEfficientResponseCellular(k, alloc, topo, config);
  }
};

class RandomRule : public ResponseRule {
 public:
  explicit RandomRule(std::uint64_t seed) : rng_(seed) {}

  std::string name() const override { return "random"; }
  BestResponse RespondD2D(int i, const PowerAllocation& alloc, const Topology& topo,
                          const ScenarioConfig& config) override;
  BestResponse RespondCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                               const ScenarioConfig& config) override;

 private:
  Rng rng_;
};

}  // namespace d2dee

#endif  // D2DEE_BASELINES_HPP
