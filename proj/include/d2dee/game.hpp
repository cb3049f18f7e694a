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

#ifndef D2DEE_GAME_HPP
#define D2DEE_GAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "d2dee/config.hpp"
#include "d2dee/fp_solver.hpp"
#include "d2dee/link_model.hpp"
#include "d2dee/topology.hpp"

namespace d2dee {

// Strategy used by every player of a game. Responses are computed against
// the full current profile; a link's own entries in `alloc` are ignored.
class ResponseRule {
 public:
  virtual ~ResponseRule() = default;

  virtual std::string name() const = 0;
  virtual BestResponse RespondD2D(int i, const PowerAllocation& alloc, const Topology& topo,
                                  const ScenarioConfig& config) = 0;
  virtual BestResponse RespondCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                                       const ScenarioConfig& config) = 0;
};

// Dinkelbach best response.
class EnergyEfficientRule : public ResponseRule {
 public:
  std::string name() const override { return "energy_efficient"; }
  BestResponse RespondD2D(int i, const PowerAllocation& alloc, const Topology& topo,
                          const ScenarioConfig& config) override {
    return DinkelbachBestResponseD2D(i, alloc, topo, config);
  }
  BestResponse RespondCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                               const ScenarioConfig& config) override {
    return DinkelbachBestResponseCellular(k, alloc, topo, config);
  }
};

struct RoundRecord {
  int round = 0;
  PowerAllocation snapshot;  // profile at the end of the round
  std::vector<LinkMetrics> d2d;
  std::vector<LinkMetrics> cellular;
  std::vector<bool> d2d_feasible;
  std::vector<bool> cell_feasible;
  // Responses computed during the round, in update order.
  std::vector<BestResponse> d2d_responses;
  std::vector<BestResponse> cell_responses;
  double max_power_change = 0.0;  // sup-norm vs the previous round; 0 for round 0

  double mean_d2d_ee() const;
  double mean_cell_ee() const;
};

struct GameTrace {
  std::string rule;
  UpdateOrder ordering = UpdateOrder::kCellularFirst;
  std::vector<RoundRecord> rounds;
  std::optional<int> converged_round;

  const PowerAllocation& final_profile() const { return rounds.back().snapshot; }
};

// Round 0: D2D silent, every cellular UE responds to silence. Rounds 1..max:
// Gauss-Seidel sweeps in `game.ordering`. Stops once a whole round moves no
// power by nash_power_tol or more.
GameTrace RunGame(const Topology& topo, const ScenarioConfig& config, const GameConfig& game,
                  ResponseRule& rule);

struct NashAudit {
  std::vector<double> d2d_improvement;   // relative EE gain available per link
  std::vector<double> cell_improvement;
  double max_improvement = 0.0;
  bool passes = false;
};

// Relative improvement (best - current) / current; +inf when current EE is
// zero and a positive-EE response exists.
double RelativeImprovement(double current, double best);

// Recomputes each UE's response to `alloc` and reports the largest relative
// EE gain a unilateral deviation achieves.
NashAudit CheckNash(const PowerAllocation& alloc, const Topology& topo,
                    const ScenarioConfig& config, double tol_ee, ResponseRule& rule);

}  // namespace d2dee

#endif  // D2DEE_GAME_HPP
