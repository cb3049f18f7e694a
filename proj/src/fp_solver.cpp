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

#include "d2dee/fp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace d2dee {
namespace {

constexpr double kLog2e = std::numbers::log2e;
constexpr double kInf = std::numeric_limits<double>::infinity();

double Sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

bool WithinSlack(double multiplier, double gap, double tol) {
  return multiplier * std::abs(gap) <= tol * std::max(1.0, multiplier);
}

// KKT point of the inner D2D problem by active set: the common level is the
// unconstrained EE level clamped to [QoS level, budget level].
DualResult ExactD2D(double q, std::span<const double> floors, const LinkLimits& limits) {
  const double free_level = q > 0.0 ? limits.pa_efficiency * kLog2e / q : kInf;
  const double budget_level = BudgetLevel(floors, limits.p_max);
  const double qos_level = QosLevel(floors, limits.r_min);
  const double level = std::min(std::max(free_level, qos_level), budget_level);

  DualResult out;
  out.exact_fallback = true;
  out.powers = PowersAtLevel(level, floors);
  if (level > free_level) {
    out.qos_multiplier = level * q / (limits.pa_efficiency * kLog2e) - 1.0;
  } else if (level < free_level) {
    out.budget_multiplier = kLog2e / level - q / limits.pa_efficiency;
  }
  return out;
}

DualResult ExactCellular(double q, double floor, double qos_power, const LinkLimits& limits) {
  const double free_power = q > 0.0 ? limits.pa_efficiency * kLog2e / q - floor : kInf;
  const double power = std::min(std::max(free_power, qos_power), limits.p_max);

  DualResult out;
  out.exact_fallback = true;
  out.powers = {power};
  if (power > free_power) {
    out.qos_multiplier = (power + floor) * q / (limits.pa_efficiency * kLog2e) - 1.0;
  } else if (power < free_power) {
    out.budget_multiplier = kLog2e / (power + floor) - q / limits.pa_efficiency;
  }
  return out;
}

// Dinkelbach outer loop shared by both link types. `inner(q)` returns the
// maximizer of rate - q * power_total.
template <typename Inner>
BestResponse RunDinkelbach(const FrozenLink& link, const LinkLimits& limits,
                           const SolverConfig& solver, Inner&& inner) {
  BestResponse out;
  out.feasible = QosAttainable(link, limits);
  out.q_trace = {0.0};

  double q = 0.0;
  double gap = 0.0;
  std::vector<double> previous;
  for (int n = 1; n <= solver.l_max; ++n) {
    DualResult step = inner(q);
    out.dual_iterations.push_back(step.iterations);
    out.exact_fallbacks += step.exact_fallback ? 1 : 0;

    const double rate = LinkRate(link, step.powers);
    const double total = LinkPowerTotal(limits, step.powers);
    const double ratio = EnergyEfficiency(rate, total);
    gap = total * (ratio - q);
    if (gap <= solver.delta) {
      if (ratio < q && !previous.empty()) {
        // Rounding left the new point marginally worse than the last one.
        out.powers = std::move(previous);
        out.q_star = q;
        out.residual = 0.0;
      } else {
        out.powers = std::move(step.powers);
        out.q_star = ratio;
        out.residual = gap;
      }
      out.converged = true;
      out.q_trace.push_back(out.q_star);
      return out;
    }
    q = ratio;
    out.q_trace.push_back(q);
    previous = std::move(step.powers);
  }
  out.powers = std::move(previous);
  out.q_star = q;
  out.residual = gap;
  return out;
}

}  // namespace

std::vector<double> FrozenLink::floors() const {
  std::vector<double> out(gains.size());
  for (std::size_t k = 0; k < gains.size(); ++k) out[k] = interference_plus_noise[k] / gains[k];
  return out;
}

FrozenLink FreezeD2D(int i, const PowerAllocation& alloc, const Topology& topo, double noise_power) {
  FrozenLink link;
  const int channels = topo.num_channels();
  link.gains.resize(channels);
  link.interference_plus_noise.resize(channels);
  for (int k = 0; k < channels; ++k) {
    link.gains[k] = topo.direct(i, k);
    link.interference_plus_noise[k] = InterferenceD2D(i, k, alloc, topo) + noise_power;
  }
  return link;
}

FrozenLink FreezeCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                          double noise_power) {
  FrozenLink link;
  link.gains = {topo.cell_to_bs(k)};
  link.interference_plus_noise = {InterferenceCellular(k, alloc, topo) + noise_power};
  return link;
}

LinkLimits D2DLimits(const ScenarioConfig& config) {
  return {config.p_d2d_max, config.qos_d2d, 2.0 * config.p_cir, config.pa_efficiency};
}

LinkLimits CellularLimits(const ScenarioConfig& config) {
  return {config.p_cell_max, config.qos_cell, config.p_cir, config.pa_efficiency};
}

double LinkRate(const FrozenLink& link, std::span<const double> powers) {
  double rate = 0.0;
  for (std::size_t k = 0; k < powers.size(); ++k) {
    rate += Log2OnePlus(powers[k] * link.gains[k] / link.interference_plus_noise[k]);
  }
  return rate;
}

double LinkPowerTotal(const LinkLimits& limits, std::span<const double> powers) {
  return Sum(powers) / limits.pa_efficiency + limits.circuit_power;
}

std::vector<double> RateMaxPowers(const FrozenLink& link, double p_max) {
  const auto floors = link.floors();
  return PowersAtLevel(BudgetLevel(floors, p_max), floors);
}

bool QosAttainable(const FrozenLink& link, const LinkLimits& limits) {
  if (limits.r_min <= 0.0) return true;
  return LinkRate(link, RateMaxPowers(link, limits.p_max)) >= limits.r_min;
}

DualResult DualAscentD2D(double q, const FrozenLink& link, const LinkLimits& limits,
                         const SolverConfig& solver) {
  LinkLimits active = limits;
  const bool feasible = QosAttainable(link, limits);
  if (!feasible) active.r_min = 0.0;  // outage: pure EE response
  const auto floors = link.floors();
  const double tol = solver.dual_tol;

  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> previous;
  int tau = 1;
  for (; tau <= solver.dual_max_iters; ++tau) {
    WaterFill step = WaterFillD2D(q, alpha, beta, link.interference_plus_noise, link.gains,
                                  active.pa_efficiency);
    if (step.unbounded()) {
      // q = beta = 0: spend the whole budget and lift beta to the level it implies.
      step.level = BudgetLevel(floors, active.p_max);
      step.powers = PowersAtLevel(step.level, floors);
      beta = (1.0 + alpha) * kLog2e / step.level - q / active.pa_efficiency;
    }
    const double rate = LinkRate(link, step.powers);
    const double spent = Sum(step.powers);

    const bool primal_ok =
        rate >= active.r_min - tol && spent <= active.p_max + kFeasibilityTolerance;
    const bool slack_ok = WithinSlack(alpha, rate - active.r_min, tol) &&
                          WithinSlack(beta, active.p_max - spent, tol);
    if (primal_ok && slack_ok) {
      DualResult out;
      out.powers = std::move(step.powers);
      out.qos_multiplier = alpha;
      out.budget_multiplier = beta;
      out.feasible = feasible;
      out.iterations = tau;
      return out;
    }
    if (!previous.empty() && MaxAbsDiff(step.powers, previous) < solver.primal_change_tol) break;
    previous = std::move(step.powers);

    const double mu = solver.step_c / std::sqrt(static_cast<double>(tau));
    alpha = std::max(0.0, alpha - mu * (rate - active.r_min));
    beta = std::max(0.0, beta + mu * (spent - active.p_max));
  }
  DualResult out = ExactD2D(q, floors, active);
  out.feasible = feasible;
  out.iterations = std::min(tau, solver.dual_max_iters);
  return out;
}

DualResult DualAscentD2D(int i, double q, const PowerAllocation& alloc, const Topology& topo,
                         const ScenarioConfig& config) {
  return DualAscentD2D(q, FreezeD2D(i, alloc, topo, config.noise_power), D2DLimits(config),
                       config.solver);
}

DualResult DualAscentCellular(double q, const FrozenLink& link, const LinkLimits& limits,
                              const SolverConfig& solver) {
  LinkLimits active = limits;
  const bool feasible = QosAttainable(link, limits);
  if (!feasible) active.r_min = 0.0;
  const double floor = link.interference_plus_noise[0] / link.gains[0];
  const double qos_power =
      active.r_min > 0.0 ? std::max(0.0, QosLevel(std::span(&floor, 1), active.r_min) - floor)
                         : 0.0;
  const double tol = solver.dual_tol;

  double theta = 0.0;
  double previous = -1.0;
  int tau = 1;
  for (; tau <= solver.dual_max_iters; ++tau) {
    double power = WaterFillCellular(q, 0.0, theta, link.interference_plus_noise[0],
                                     link.gains[0], active.pa_efficiency);
    if (std::isinf(power)) {
      power = active.p_max;
      theta = kLog2e / (power + floor) - q / active.pa_efficiency;
    }
    const double unconstrained = power;
    power = std::max(power, qos_power);

    if (power <= active.p_max + kFeasibilityTolerance &&
        WithinSlack(theta, active.p_max - power, tol)) {
      DualResult out;
      out.powers = {power};
      out.budget_multiplier = theta;
      if (power > unconstrained && q > 0.0) {
        out.qos_multiplier = (power + floor) * q / (active.pa_efficiency * kLog2e) - 1.0;
      }
      out.feasible = feasible;
      out.iterations = tau;
      return out;
    }
    if (previous >= 0.0 && std::abs(power - previous) < solver.primal_change_tol) break;
    previous = power;

    const double mu = solver.step_c / std::sqrt(static_cast<double>(tau));
    theta = std::max(0.0, theta + mu * (power - active.p_max));
  }
  DualResult out = ExactCellular(q, floor, qos_power, active);
  out.feasible = feasible;
  out.iterations = std::min(tau, solver.dual_max_iters);
  return out;
}

DualResult DualAscentCellular(int k, double q, const PowerAllocation& alloc, const Topology& topo,
                              const ScenarioConfig& config) {
  return DualAscentCellular(q, FreezeCellular(k, alloc, topo, config.noise_power),
                            CellularLimits(config), config.solver);
}

BestResponse DinkelbachD2D(const FrozenLink& link, const LinkLimits& limits,
                           const SolverConfig& solver) {
  return RunDinkelbach(link, limits, solver,
                       [&](double q) { return DualAscentD2D(q, link, limits, solver); });
}

BestResponse DinkelbachCellular(const FrozenLink& link, const LinkLimits& limits,
                                const SolverConfig& solver) {
  return RunDinkelbach(link, limits, solver,
                       [&](double q) { return DualAscentCellular(q, link, limits, solver); });
}

BestResponse DinkelbachBestResponseD2D(int i, const PowerAllocation& alloc, const Topology& topo,
                                       const ScenarioConfig& config) {
  return DinkelbachD2D(FreezeD2D(i, alloc, topo, config.noise_power), D2DLimits(config),
                       config.solver);
}

BestResponse DinkelbachBestResponseCellular(int k, const PowerAllocation& alloc,
                                            const Topology& topo, const ScenarioConfig& config) {
  return DinkelbachCellular(FreezeCellular(k, alloc, topo, config.noise_power),
                            CellularLimits(config), config.solver);
}

}  // namespace d2dee
