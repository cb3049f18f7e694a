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

// Per-link energy-efficiency best response.
//
// The fractional objective rate / power_total is handled with Dinkelbach's
// parametric method: for a fixed q the link solves
//   max rate(p) - q * power_total(p)  s.t. QoS floor, power budget,
// which is concave. That inner problem is solved through its Lagrange dual:
// the primal step is the closed-form water-filling and the multipliers move by
// projected gradient steps mu(tau) = step_c / sqrt(tau). When the gradient
// iteration stalls or hits its cap before the KKT residuals are within
// dual_tol, the multipliers are finished off by the exact active-set solution
// of the same KKT system (the level is clamped between the QoS and budget
// levels), so a returned primal point always satisfies KKT.
//
// Interference from every other UE is frozen for the whole solve.

#ifndef D2DEE_FP_SOLVER_HPP
#define D2DEE_FP_SOLVER_HPP

#include <span>
#include <vector>

#include "d2dee/config.hpp"
#include "d2dee/link_model.hpp"
#include "d2dee/topology.hpp"
#include "d2dee/water_filling.hpp"

namespace d2dee {

// One link's view of the channel with all other transmitters frozen.
struct FrozenLink {
  std::vector<double> gains;                    // own gain per channel
  std::vector<double> interference_plus_noise;  // W, per channel

  std::size_t num_channels() const { return gains.size(); }
  // I_k / g_k per channel.
  std::vector<double> floors() const;
};

FrozenLink FreezeD2D(int i, const PowerAllocation& alloc, const Topology& topo, double noise_power);
FrozenLink FreezeCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                          double noise_power);

struct LinkLimits {
  double p_max = 0.0;
  double r_min = 0.0;
  double circuit_power = 0.0;  // 2 p_cir for a D2D pair, p_cir for a cellular UE
  double pa_efficiency = 0.0;
};

LinkLimits D2DLimits(const ScenarioConfig& config);
LinkLimits CellularLimits(const ScenarioConfig& config);

double LinkRate(const FrozenLink& link, std::span<const double> powers);
double LinkPowerTotal(const LinkLimits& limits, std::span<const double> powers);

// Budget-exhausting rate-maximizing allocation.
std::vector<double> RateMaxPowers(const FrozenLink& link, double p_max);

// True when the QoS floor is reachable within the budget.
bool QosAttainable(const FrozenLink& link, const LinkLimits& limits);

struct DualResult {
  std::vector<double> powers;
  double qos_multiplier = 0.0;     // alpha (D2D) / delta (cellular)
  double budget_multiplier = 0.0;  // beta (D2D) / theta (cellular)
  bool feasible = true;            // false: QoS unattainable, solved without it
  int iterations = 0;
  bool exact_fallback = false;
};

// Solves max rate - q * power_total under QoS and budget for a frozen link.
DualResult DualAscentD2D(double q, const FrozenLink& link, const LinkLimits& limits,
                         const SolverConfig& solver);
DualResult DualAscentD2D(int i, double q, const PowerAllocation& alloc, const Topology& topo,
                         const ScenarioConfig& config);

// Scalar version. Only the budget is dualized; the QoS floor is the lower end
// of the feasible interval, which is how the cellular solve enforces it (a
// (1 - delta) level can only shrink as delta grows). The reported
// qos_multiplier is the KKT value in the (1 + delta) orientation.
DualResult DualAscentCellular(double q, const FrozenLink& link, const LinkLimits& limits,
                              const SolverConfig& solver);
DualResult DualAscentCellular(int k, double q, const PowerAllocation& alloc, const Topology& topo,
                              const ScenarioConfig& config);

struct BestResponse {
  std::vector<double> powers;  // one entry per channel (D2D) or one entry (cellular)
  double q_star = 0.0;         // EE at `powers`
  bool feasible = true;
  bool converged = false;
  // r(p*) - q_last * power_total(p*), q_last being the parameter p* was
  // computed for. Within [0, delta] whenever converged.
  double residual = 0.0;
  std::vector<double> q_trace;  // 0, q_1, ..., q_star; nondecreasing
  std::vector<int> dual_iterations;
  int exact_fallbacks = 0;
};

BestResponse DinkelbachD2D(const FrozenLink& link, const LinkLimits& limits,
                           const SolverConfig& solver);
BestResponse DinkelbachCellular(const FrozenLink& link, const LinkLimits& limits,
                                const SolverConfig& solver);

// Best response of D2D pair i (cellular UE k) against the other powers in `alloc`.
BestResponse DinkelbachBestResponseD2D(int i, const PowerAllocation& alloc, const Topology& topo,
                                       const ScenarioConfig& config);
BestResponse DinkelbachBestResponseCellular(int k, const PowerAllocation& alloc,
                                            const Topology& topo, const ScenarioConfig& config);

}  // namespace d2dee

#endif  // D2DEE_FP_SOLVER_HPP
