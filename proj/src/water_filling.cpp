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

#include "d2dee/water_filling.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "d2dee/config.hpp"
#include "d2dee/link_model.hpp"

namespace d2dee {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> Sorted(std::span<const double> floors) {
  std::vector<double> sorted(floors.begin(), floors.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

WaterFill WaterFillD2D(double q, double qos_multiplier, double budget_multiplier,
                       std::span<const double> interference_plus_noise,
                       std::span<const double> gains, double pa_efficiency) {
  if (interference_plus_noise.size() != gains.size()) {
    throw DomainError("water-filling: channel count mismatch");
  }
  WaterFill out;
  const double denom = q + pa_efficiency * budget_multiplier;
  if (denom <= 0.0) {
    out.level = kInf;
    return out;
  }
  out.level = pa_efficiency * (1.0 + qos_multiplier) * std::numbers::log2e / denom;
  out.powers.resize(gains.size());
  for (std::size_t k = 0; k < gains.size(); ++k) {
    out.powers[k] = std::max(0.0, out.level - interference_plus_noise[k] / gains[k]);
  }
  return out;
}

double WaterFillCellular(double q, double qos_multiplier, double budget_multiplier,
                         double interference_plus_noise, double gain, double pa_efficiency) {
  const double numer =
      pa_efficiency * (1.0 + kCellularQosSign * qos_multiplier) * std::numbers::log2e;
  if (numer <= 0.0) return 0.0;
  const double denom = q + pa_efficiency * budget_multiplier;
  if (denom <= 0.0) return kInf;
  return std::max(0.0, numer / denom - interference_plus_noise / gain);
}

std::vector<double> PowersAtLevel(double level, std::span<const double> floors) {
  std::vector<double> powers(floors.size());
  for (std::size_t k = 0; k < floors.size(); ++k) {
    powers[k] = std::max(0.0, level - floors[k]);
  }
  return powers;
}

double RateAtLevel(double level, std::span<const double> floors) {
  double rate = 0.0;
  for (double f : floors) {
    if (level > f) rate += Log2OnePlus((level - f) / f);
  }
  return rate;
}

double BudgetLevel(std::span<const double> floors, double budget) {
  const auto sorted = Sorted(floors);
  double partial = 0.0;
  for (std::size_t m = 1; m <= sorted.size(); ++m) {
    partial += sorted[m - 1];
    const double level = (budget + partial) / static_cast<double>(m);
    if (m == sorted.size() || level <= sorted[m]) return level;
  }
  return kInf;  // unreachable for non-empty input
}

double QosLevel(std::span<const double> floors, double rate) {
  const auto sorted = Sorted(floors);
  if (sorted.empty()) return kInf;
  if (rate <= 0.0) return sorted.front();
  double log_partial = 0.0;
  for (std::size_t m = 1; m <= sorted.size(); ++m) {
    log_partial += std::log2(sorted[m - 1]);
    const double level = std::exp2((rate + log_partial) / static_cast<double>(m));
    if (m == sorted.size() || level <= sorted[m]) return level;
  }
  return kInf;
}

}  // namespace d2dee
