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

#include "d2dee/topology.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace d2dee {
namespace {

Point UniformInDisk(const Point& center, double radius, Rng& rng) {
  const double r = radius * std::sqrt(rng.Uniform());
  const double angle = 2.0 * std::numbers::pi * rng.Uniform();
  return {center.x + r * std::cos(angle), center.y + r * std::sin(angle)};
}

double FadedGain(const Point& tx, const Point& rx, Rng& rng) {
  return ChannelGain(Distance(tx, rx), std::norm(rng.ComplexGaussian()));
}

bool PositiveFinite(double g) { return g > 0.0 && std::isfinite(g); }

}  // namespace

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Topology::Topology(int num_d2d, int num_cellular)
    : cell_positions(num_cellular),
      d2d_tx_positions(num_d2d),
      d2d_rx_positions(num_d2d),
      num_d2d_(num_d2d),
      num_cellular_(num_cellular),
      direct_(static_cast<std::size_t>(num_d2d) * num_cellular, 0.0),
      cell_to_d2d_(static_cast<std::size_t>(num_cellular) * num_d2d, 0.0),
      d2d_to_d2d_(static_cast<std::size_t>(num_d2d) * num_d2d * num_cellular, 0.0),
      cell_to_bs_(num_cellular, 0.0),
      d2d_to_bs_(static_cast<std::size_t>(num_d2d) * num_cellular, 0.0) {}

double ChannelGain(double distance, double fading_power) {
  if (!(distance > 0.0)) {
    throw DomainError("channel gain: distance must be > 0, got " + std::to_string(distance));
  }
  if (!(fading_power >= 0.0)) {
    throw DomainError("channel gain: fading power must be >= 0");
  }
  return fading_power / (distance * distance);
}

Topology GenerateTopology(const ScenarioConfig& config, Rng& rng) {
  config.Validate();
  const int n = config.num_d2d_pairs;
  const int k_count = config.num_cellular;
  Topology topo(n, k_count);

  for (auto& p : topo.cell_positions) {
    p = UniformInDisk(topo.bs_position, config.cell_radius, rng);
  }
  for (int i = 0; i < n; ++i) {
    const Point tx = UniformInDisk(topo.bs_position, config.cell_radius, rng);
    Point rx;
    do {
      rx = UniformInDisk(tx, config.d2d_max_distance, rng);
    } while (Distance(rx, topo.bs_position) > config.cell_radius);
    topo.d2d_tx_positions[i] = tx;
    topo.d2d_rx_positions[i] = rx;
  }

  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < k_count; ++k) {
      topo.direct(i, k) = FadedGain(topo.d2d_tx_positions[i], topo.d2d_rx_positions[i], rng);
    }
  }
  for (int k = 0; k < k_count; ++k) {
    for (int i = 0; i < n; ++i) {
      topo.cell_to_d2d(k, i) = FadedGain(topo.cell_positions[k], topo.d2d_rx_positions[i], rng);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (j == i) continue;
      for (int k = 0; k < k_count; ++k) {
        topo.d2d_to_d2d(j, i, k) =
            FadedGain(topo.d2d_tx_positions[j], topo.d2d_rx_positions[i], rng);
      }
    }
  }
  for (int k = 0; k < k_count; ++k) {
    topo.cell_to_bs(k) = FadedGain(topo.cell_positions[k], topo.bs_position, rng);
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < k_count; ++k) {
      topo.d2d_to_bs(i, k) = FadedGain(topo.d2d_tx_positions[i], topo.bs_position, rng);
    }
  }
  return topo;
}

Topology GenerateTopology(const ScenarioConfig& config) {
  Rng rng(config.seed);
  return GenerateTopology(config, rng);
}

void ValidateTopology(const Topology& topo, const ScenarioConfig& config) {
  const int n = topo.num_d2d();
  const int k_count = topo.num_cellular();
  if (static_cast<int>(topo.cell_positions.size()) != k_count ||
      static_cast<int>(topo.d2d_tx_positions.size()) != n ||
      static_cast<int>(topo.d2d_rx_positions.size()) != n) {
    throw ConfigError("topology", "position arrays do not match N/K");
  }
  auto inside = [&](const Point& p) {
    return Distance(p, topo.bs_position) <= config.cell_radius;
  };
  for (int k = 0; k < k_count; ++k) {
    if (!inside(topo.cell_positions[k])) {
      throw ConfigError("topology.cell_positions", "UE " + std::to_string(k) + " outside the cell");
    }
    if (!PositiveFinite(topo.cell_to_bs(k))) {
      throw ConfigError("topology.g_cell2bs", "non-positive gain");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!inside(topo.d2d_tx_positions[i]) || !inside(topo.d2d_rx_positions[i])) {
      throw ConfigError("topology.d2d_positions", "pair " + std::to_string(i) + " outside the cell");
    }
    if (Distance(topo.d2d_tx_positions[i], topo.d2d_rx_positions[i]) > config.d2d_max_distance) {
      throw ConfigError("topology.d2d_positions", "pair " + std::to_string(i) + " too far apart");
    }
    for (int k = 0; k < k_count; ++k) {
      if (!PositiveFinite(topo.direct(i, k)) || !PositiveFinite(topo.cell_to_d2d(k, i)) ||
          !PositiveFinite(topo.d2d_to_bs(i, k))) {
        throw ConfigError("topology.gains", "non-positive gain for pair " + std::to_string(i));
      }
      for (int j = 0; j < n; ++j) {
        if (j != i && !PositiveFinite(topo.d2d_to_d2d(j, i, k))) {
          throw ConfigError("topology.g_d2d2d2d", "non-positive gain");
        }
      }
    }
  }
}

}  // namespace d2dee
