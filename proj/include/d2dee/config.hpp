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

#ifndef D2DEE_CONFIG_HPP
#define D2DEE_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace d2dee {

// Raised when a configuration value is out of range. what() names the field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& reason)
      : std::invalid_argument(field + ": " + reason), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Raised by evaluation helpers on arguments outside their mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// File-system failure; what() carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Absolute tolerance (W) for power-budget checks.
inline constexpr double kFeasibilityTolerance = 1e-9;

// Dinkelbach outer loop plus inner dual ascent.
struct SolverConfig {
  double delta = 1e-3;        // Dinkelbach residual tolerance
  int l_max = 10;             // Dinkelbach iteration cap
  int dual_max_iters = 500;   // inner dual-ascent cap
  double dual_tol = 1e-6;     // feasibility / complementary-slackness tolerance
  double step_c = 0.1;        // dual step size mu(tau) = step_c / sqrt(tau)
  double primal_change_tol = 1e-7;  // W, inner-loop stall detector

  void Validate() const;
};

// Physical scenario. Defaults are the reference simulation parameters.
struct ScenarioConfig {
  double cell_radius = 500.0;      // m
  double d2d_max_distance = 25.0;  // m
  int num_d2d_pairs = 5;
  int num_cellular = 3;
  double p_d2d_max = 0.2;    // W
  double p_cell_max = 0.2;   // W
  double p_cir = 0.01;       // W, per device
  double noise_power = 1e-7; // W
  double pa_efficiency = 0.35;
  double qos_d2d = 0.5;      // bit/s/Hz
  double qos_cell = 0.1;     // bit/s/Hz
  std::uint64_t seed = 0;
  SolverConfig solver;

  // Throws ConfigError naming the first offending field.
  void Validate() const;
};

enum class UpdateOrder {
  kCellularFirst,  // cellular UEs 1..K, then D2D pairs 1..N
  kD2DFirst,       // D2D pairs 1..N, then cellular UEs 1..K
};

std::string ToString(UpdateOrder order);
UpdateOrder UpdateOrderFromString(const std::string& name);

struct GameConfig {
  int max_rounds = 10;
  double nash_power_tol = 1e-6;  // W, sup-norm over one full round
  UpdateOrder ordering = UpdateOrder::kCellularFirst;

  void Validate() const;
};

}  // namespace d2dee

#endif  // D2DEE_CONFIG_HPP
