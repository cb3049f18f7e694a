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

#ifndef D2DEE_WATER_FILLING_HPP
#define D2DEE_WATER_FILLING_HPP

#include <cmath>
#include <span>
#include <vector>

namespace d2dee {

// Result of a closed-form primal step p_k = [level - I_k / g_k]^+.
// When the denominator q + eta * beta vanishes the level is +inf and
// `powers` is left empty; the caller clamps to the budget.
struct WaterFill {
  double level = 0.0;
  std::vector<double> powers;

  bool unbounded() const { return std::isinf(level); }
};

// EE water-filling for a D2D transmitter:
//   level = eta (1 + qos_multiplier) log2(e) / (q + eta * budget_multiplier).
WaterFill WaterFillD2D(double q, double qos_multiplier, double budget_multiplier,
                       std::span<const double> interference_plus_noise,
                       std::span<const double> gains, double pa_efficiency);

// Sign applied to the QoS multiplier in the cellular water level. The
// reference closed form carries (1 - delta); a (1 + delta) reading would be
// the one consistent with a rate floor. Kept here so the choice is auditable.
inline constexpr double kCellularQosSign = -1.0;

// Cellular water-filling:
//   p = [eta (1 + kCellularQosSign * delta) log2(e) / (q + eta * theta) - I / g]^+.
// Returns 0 when the numerator is nonpositive, +inf when only the
// denominator vanishes.
double WaterFillCellular(double q, double qos_multiplier, double budget_multiplier,
                         double interference_plus_noise, double gain, double pa_efficiency);

// Powers [level - floor_k]^+ for per-channel noise floors I_k / g_k.
std::vector<double> PowersAtLevel(double level, std::span<const double> floors);

// Rate sum_k log2(max(1, level / floor_k)) of the allocation at `level`.
double RateAtLevel(double level, std::span<const double> floors);

// Level whose allocation spends exactly `budget` watts (rate-maximizing
// water-filling). Exact active-set solution, no iteration.
double BudgetLevel(std::span<const double> floors, double budget);

// Smallest level whose allocation reaches `rate` bit/s/Hz. Exact.
double QosLevel(std::span<const double> floors, double rate);

}  // namespace d2dee

#endif  // D2DEE_WATER_FILLING_HPP
