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

#include "d2dee/config.hpp"

#include <cmath>

namespace d2dee {
namespace {

void RequirePositive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(field, "must be finite and > 0");
  }
}

}  // namespace

void SolverConfig::Validate() const {
  RequirePositive(delta, "solver.delta");
  if (l_max < 1) throw ConfigError("solver.l_max", "must be >= 1");
  if (dual_max_iters < 1) throw ConfigError("solver.dual_max_iters", "must be >= 1");
  RequirePositive(dual_tol, "solver.dual_tol");
  RequirePositive(step_c, "solver.step_c");
  RequirePositive(primal_change_tol, "solver.primal_change_tol");
}

void ScenarioConfig::Validate() const {
  RequirePositive(cell_radius, "cell_radius");
  RequirePositive(d2d_max_distance, "d2d_max_distance");
  if (num_d2d_pairs < 1) throw ConfigError("num_d2d_pairs", "must be >= 1");
  if (num_cellular < 1) throw ConfigError("num_cellular", "must be >= 1");
  RequirePositive(p_d2d_max, "p_d2d_max");
  RequirePositive(p_cell_max, "p_cell_max");
  RequirePositive(p_cir, "p_cir");
  RequirePositive(noise_power, "noise_power");
  if (!(pa_efficiency > 0.0 && pa_efficiency < 1.0)) {
    throw ConfigError("pa_efficiency", "must lie in (0, 1)");
  }
  if (!(qos_d2d >= 0.0) || !std::isfinite(qos_d2d)) {
    throw ConfigError("qos_d2d", "must be finite and >= 0");
  }
  if (!(qos_cell >= 0.0) || !std::isfinite(qos_cell)) {
    throw ConfigError("qos_cell", "must be finite and >= 0");
  }
  solver.Validate();
}

std::string ToString(UpdateOrder order) {
  switch (order) {
    case UpdateOrder::kCellularFirst:
      return "cellular_first";
    case UpdateOrder::kD2DFirst:
      return "d2d_first";
  }
  return "unknown";
}

UpdateOrder UpdateOrderFromString(const std::string& name) {
  if (name == "cellular_first") return UpdateOrder::kCellularFirst;
  if (name == "d2d_first") return UpdateOrder::kD2DFirst;
  throw ConfigError("game.ordering", "unknown policy '" + name + "'");
}

void GameConfig::Validate() const {
  if (max_rounds < 1) throw ConfigError("game.max_rounds", "must be >= 1");
  RequirePositive(nash_power_tol, "game.nash_power_tol");
}

}  // namespace d2dee
