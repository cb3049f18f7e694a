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

#ifndef D2DEE_TOPOLOGY_HPP
#define D2DEE_TOPOLOGY_HPP

#include <cstddef>
#include <vector>

#include "d2dee/config.hpp"
#include "d2dee/rng.hpp"

namespace d2dee {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double Distance(const Point& a, const Point& b);

// Single-cell uplink layout and every channel gain the link model reads.
// Channel k is the orthogonal channel owned by cellular UE k; every D2D
// pair reuses all K channels.
class Topology {
 public:
  Topology() = default;
  Topology(int num_d2d, int num_cellular);

  int num_d2d() const { return num_d2d_; }
  int num_cellular() const { return num_cellular_; }
  int num_channels() const { return num_cellular_; }

  Point bs_position;
  std::vector<Point> cell_positions;
  std::vector<Point> d2d_tx_positions;
  std::vector<Point> d2d_rx_positions;

  // D2D pair i on channel k.
  double& direct(int i, int k) { return direct_[i * num_cellular_ + k]; }
  double direct(int i, int k) const { return direct_[i * num_cellular_ + k]; }

  // Cellular UE k -> D2D receiver i (on channel k).
  double& cell_to_d2d(int k, int i) { return cell_to_d2d_[k * num_d2d_ + i]; }
  double cell_to_d2d(int k, int i) const { return cell_to_d2d_[k * num_d2d_ + i]; }

  // D2D transmitter j -> D2D receiver i on channel k. Unused for j == i.
  double& d2d_to_d2d(int j, int i, int k) { return d2d_to_d2d_[Flat3(j, i, k)]; }
  double d2d_to_d2d(int j, int i, int k) const { return d2d_to_d2d_[Flat3(j, i, k)]; }

  // Cellular UE k -> BS.
  double& cell_to_bs(int k) { return cell_to_bs_[k]; }
  double cell_to_bs(int k) const { return cell_to_bs_[k]; }

  // D2D transmitter i -> BS on channel k.
  double& d2d_to_bs(int i, int k) { return d2d_to_bs_[i * num_cellular_ + k]; }
  double d2d_to_bs(int i, int k) const { return d2d_to_bs_[i * num_cellular_ + k]; }

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  std::size_t Flat3(int j, int i, int k) const {
    return (static_cast<std::size_t>(j) * num_d2d_ + i) * num_cellular_ + k;
  }

  int num_d2d_ = 0;
  int num_cellular_ = 0;
  std::vector<double> direct_;
  std::vector<double> cell_to_d2d_;
  std::vector<double> d2d_to_d2d_;
  std::vector<double> cell_to_bs_;
  std::vector<double> d2d_to_bs_;
};

// distance^-2 * |h|^2. Throws DomainError for distance <= 0 or negative fading.
double ChannelGain(double distance, double fading_power);

// Draws a scenario. Stream order: cellular positions, then per D2D pair the
// transmitter and its (rejection-sampled) receiver, then fading in the order
// direct[i][k], cell_to_d2d[k][i], d2d_to_d2d[j][i][k] (j != i),
// cell_to_bs[k], d2d_to_bs[i][k].
Topology GenerateTopology(const ScenarioConfig& config, Rng& rng);

// Same, seeded from config.seed.
Topology GenerateTopology(const ScenarioConfig& config);

// Checks geometry and gain invariants; throws ConfigError on the first failure.
void ValidateTopology(const Topology& topo, const ScenarioConfig& config);

}  // namespace d2dee

#endif  // D2DEE_TOPOLOGY_HPP
