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

#include "d2dee/link_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace d2dee {

double PowerAllocation::d2d_sum(int i) const {
  const auto row = d2d_row(i);
  return std::accumulate(row.begin(), row.end(), 0.0);
}

double MaxAbsDifference(const PowerAllocation& a, const PowerAllocation& b) {
  double worst = 0.0;
  for (std::size_t idx = 0; idx < a.d2d_flat().size(); ++idx) {
    worst = std::max(worst, std::abs(a.d2d_flat()[idx] - b.d2d_flat()[idx]));
  }
  for (std::size_t idx = 0; idx < a.cell_flat().size(); ++idx) {
    worst = std::max(worst, std::abs(a.cell_flat()[idx] - b.cell_flat()[idx]));
  }
  return worst;
}

bool SatisfiesBudgets(const PowerAllocation& alloc, const ScenarioConfig& config) {
  for (double p : alloc.d2d_flat()) {
    if (!(p >= 0.0)) return false;
  }
  for (double p : alloc.cell_flat()) {
    if (!(p >= 0.0) || p > config.p_cell_max + kFeasibilityTolerance) return false;
  }
  for (int i = 0; i < alloc.num_d2d(); ++i) {
    if (alloc.d2d_sum(i) > config.p_d2d_max + kFeasibilityTolerance) return false;
  }
  return true;
}

double Log2OnePlus(double x) {
  if (x < 1e-8) return std::log1p(x) * std::numbers::log2e;
  return std::log2(1.0 + x);
}

double InterferenceD2D(int i, int k, const PowerAllocation& alloc, const Topology& topo) {
  double total = alloc.cell(k) * topo.cell_to_d2d(k, i);
  for (int j = 0; j < topo.num_d2d(); ++j) {
    if (j != i) total += alloc.d2d(j, k) * topo.d2d_to_d2d(j, i, k);
  }
  return total;
}

double InterferenceCellular(int k, const PowerAllocation& alloc, const Topology& topo) {
  double total = 0.0;
  for (int i = 0; i < topo.num_d2d(); ++i) total += alloc.d2d(i, k) * topo.d2d_to_bs(i, k);
  return total;
}

double SinrD2D(int i, int k, const PowerAllocation& alloc, const Topology& topo, double noise_power) {
  const double signal = alloc.d2d(i, k) * topo.direct(i, k);
  if (signal == 0.0) return 0.0;
  return signal / (InterferenceD2D(i, k, alloc, topo) + noise_power);
}

double SinrCellular(int k, const PowerAllocation& alloc, const Topology& topo, double noise_power) {
  const double signal = alloc.cell(k) * topo.cell_to_bs(k);
  if (signal == 0.0) return 0.0;
  return signal / (InterferenceCellular(k, alloc, topo) + noise_power);
}

double RateD2D(int i, const PowerAllocation& alloc, const Topology& topo, double noise_power) {
  double rate = 0.0;
  for (int k = 0; k < topo.num_channels(); ++k) {
    rate += Log2OnePlus(SinrD2D(i, k, alloc, topo, noise_power));
  }
  return rate;
}

double RateCellular(int k, const PowerAllocation& alloc, const Topology& topo, double noise_power) {
  return Log2OnePlus(SinrCellular(k, alloc, topo, noise_power));
}

double PowerTotalD2D(int i, const PowerAllocation& alloc, double pa_efficiency, double p_cir) {
  return alloc.d2d_sum(i) / pa_efficiency + 2.0 * p_cir;
}

double PowerTotalCellular(int k, const PowerAllocation& alloc, double pa_efficiency, double p_cir) {
  return alloc.cell(k) / pa_efficiency + p_cir;
}

double EnergyEfficiency(double rate, double power_total) {
  if (rate == 0.0) return 0.0;
  return rate / power_total;
}

double EeD2D(int i, const PowerAllocation& alloc, const Topology& topo, const ScenarioConfig& config) {
  return EnergyEfficiency(RateD2D(i, alloc, topo, config.noise_power),
                          PowerTotalD2D(i, alloc, config.pa_efficiency, config.p_cir));
}

double EeCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                  const ScenarioConfig& config) {
  return EnergyEfficiency(RateCellular(k, alloc, topo, config.noise_power),
                          PowerTotalCellular(k, alloc, config.pa_efficiency, config.p_cir));
}

LinkMetrics MetricsD2D(int i, const PowerAllocation& alloc, const Topology& topo,
                       const ScenarioConfig& config) {
  LinkMetrics m;
  m.sinr_per_channel.reserve(topo.num_channels());
  for (int k = 0; k < topo.num_channels(); ++k) {
    m.sinr_per_channel.push_back(SinrD2D(i, k, alloc, topo, config.noise_power));
  }
  m.rate = RateD2D(i, alloc, topo, config.noise_power);
  m.power_total = PowerTotalD2D(i, alloc, config.pa_efficiency, config.p_cir);
  m.ee = EnergyEfficiency(m.rate, m.power_total);
  return m;
}

LinkMetrics MetricsCellular(int k, const PowerAllocation& alloc, const Topology& topo,
                            const ScenarioConfig& config) {
  LinkMetrics m;
  m.sinr_per_channel = {SinrCellular(k, alloc, topo, config.noise_power)};
  m.rate = RateCellular(k, alloc, topo, config.noise_power);
  m.power_total = PowerTotalCellular(k, alloc, config.pa_efficiency, config.p_cir);
  m.ee = EnergyEfficiency(m.rate, m.power_total);
  return m;
}

double NetworkEe(const PowerAllocation& alloc, const Topology& topo, const ScenarioConfig& config) {
  double total = 0.0;
  for (int i = 0; i < topo.num_d2d(); ++i) total += EeD2D(i, alloc, topo, config);
  for (int k = 0; k < topo.num_cellular(); ++k) total += EeCellular(k, alloc, topo, config);
  return total;
}

}  // namespace d2dee
