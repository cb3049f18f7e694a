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

#ifndef D2DEE_LINK_MODEL_HPP
#define D2DEE_LINK_MODEL_HPP

#include <span>
#include <vector>

#include "d2dee/config.hpp"
#include "d2dee/topology.hpp"

namespace d2dee {

// Full strategy profile. All powers in watts.
class PowerAllocation {
 public:
  PowerAllocation() = default;
  PowerAllocation(int num_d2d, int num_cellular)
      : num_d2d_(num_d2d),
        num_cellular_(num_cellular),
        d2d_(static_cast<std::size_t>(num_d2d) * num_cellular, 0.0),
        cell_(num_cellular, 0.0) {}

  int num_d2d() const { return num_d2d_; }
  int num_cellular() const { return num_cellular_; }

  double& d2d(int i, int k) { return d2d_[i * num_cellular_ + k]; }
  double d2d(int i, int k) const { return d2d_[i * num_cellular_ + k]; }
  double& cell(int k) { return cell_[k]; }
  double cell(int k) const { return cell_[k]; }

  // Per-channel powers of D2D transmitter i.
  std::span<double> d2d_row(int i) {
    return {d2d_.data() + i * num_cellular_, static_cast<std::size_t>(num_cellular_)};
  }
  std::span<const double> d2d_row(int i) const {
    return {d2d_.data() + i * num_cellular_, static_cast<std::size_t>(num_cellular_)};
  }
  double d2d_sum(int i) const;

  const std::vector<double>& d2d_flat() const { return d2d_; }
  const std::vector<double>& cell_flat() const { return cell_; }

  friend bool operator==(const PowerAllocation&, const PowerAllocation&) = default;

 private:
  int num_d2d_ = 0;
  int num_cellular_ = 0;
  std::vector<double> d2d_;
  std::vector<double> cell_;
};

// Largest absolute per-entry difference between two profiles of equal shape.
double MaxAbsDifference(const PowerAllocation& a, const PowerAllocation& b);

// Nonnegativity plus budget constraints, each to kFeasibilityTolerance.
bool SatisfiesBudgets(const PowerAllocation& alloc, const ScenarioConfig& config);

struct LinkMetrics {
  std::vector<double> sinr_per_channel;
  double rate = 0.0;         // bit/s/Hz
  double power_total = 0.0;  // W
  double ee = 0.0;           // bit/Hz/J
};

// log2(1 + x), switching to log1p below 1e-8.
double Log2OnePlus(double x);

// Co-channel interference (without noise) seen by D2D receiver i on channel k.
double InterferenceD2D(int i, int k, const PowerAllocation& alloc, const Topology& topo);
// D2D interference at the BS on channel k.
double InterferenceCellular(int k, const PowerAllocation& alloc, const Topology& topo);

double SinrD2D(int i, int k, const PowerAllocation& alloc, const Topology& topo, double noise_power);
double SinrCellular(int k, const PowerAllocation& alloc, const Topology& topo, double noise_power);

double RateD2D(int i, const PowerAllocation& alloc, const Topology& topo, double noise_power);
double RateCellular(int k, const PowerAllocation& alloc, const Topology& topo, double noise_power);

double PowerTotalD2D(int i, const PowerAllocation& alloc, double pa_efficiency, double p_cir);
double PowerTotalCellular(int k, const PowerAllocation& alloc, double pa_efficiency, double p_cir);

// rate / power_total; zero rate gives zero even when power_total is zero.
double EnergyEfficiency(double rate, double power_total);

double EeD2D(int i, const PowerAllocation& alloc, const Topology& topo, const ScenarioConfig& config);
double EeCellular(int k, const PowerAllocation& alloc, const Topology& topo, const ScenarioConfig& config);

LinkMetrics MetricsD2D(int i, const PowerAllocation& alloc, const Topology& topo, const ScenarioConfig& config);
LinkMetrics MetricsCellular(int k, const PowerAllocation& alloc, const Topology& topo, const ScenarioConfig& config);

// Sum of per-link EEs over all D2D pairs and cellular UEs.
double NetworkEe(const PowerAllocation& alloc, const Topology& topo, const ScenarioConfig& config);

}  // namespace d2dee

#endif  // D2DEE_LINK_MODEL_HPP
