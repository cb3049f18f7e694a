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


#include "d2dee/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "d2dee/regimes.hpp"

namespace d2dee {
namespace {

int GridCount(double p_max, double step) {
  return static_cast<int>(std::floor(p_max / step + 1e-9));
}

double Ee(double rate, double transmit, const LinkLimits& limits) {
  return rate / (transmit / limits.pa_efficiency + limits.circuit_power);
}

double Rate(const FrozenLink& link, int k, double p) {
  return std::log2(1.0 + p * link.gains[k] / link.interference_plus_noise[k]);
}

// Best point of row i (p1 = i * step) of the two-channel simplex.
GridOptimum Row(const FrozenLink& link, const LinkLimits& limits, double step, int i, int n) {
  GridOptimum best;
  const double p1 = i * step;
  const double r1 = Rate(link, 0, p1);
  for (int j = 0; i + j <= n; ++j) {
    const double p2 = j * step;
    const double rate = r1 + Rate(link, 1, p2);
    ++best.evaluated;
    if (rate < limits.r_min) continue;
    const double ee = Ee(rate, p1 + p2, limits);
    if (!best.found || ee > best.value) {
      best.found = true;
      best.value = ee;
      best.powers = {p1, p2};
    }
  }
  return best;
}

void Merge(GridOptimum& into, const GridOptimum& row) {
  into.evaluated += row.evaluated;
  if (row.found && (!into.found || row.value > into.value)) {
    into.found = true;
    into.value = row.value;
    into.powers = row.powers;
  }
}

Point UniformInDisk(double radius, Rng& rng) {
  const double r = radius * std::sqrt(rng.Uniform());
  const double phi = 2.0 * 3.141592653589793 * rng.Uniform();
  return {r * std::cos(phi), r * std::sin(phi)};
}

double Fading(Rng& rng) { return std::norm(rng.ComplexGaussian()); }

double GainAt(double distance, Rng& rng) {
  return Fading(rng) / (std::max(distance, 1.0) * std::max(distance, 1.0));
}

double Relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

GridOptimum GridSearchEe1(const FrozenLink& link, const LinkLimits& limits, double step) {
  GridOptimum best;
  const int n = GridCount(limits.p_max, step);
  for (int i = 0; i <= n; ++i) {
    const double p = i * step;
    const double rate = Rate(link, 0, p);
    ++best.evaluated;
    if (rate < limits.r_min) continue;
    const double ee = Ee(rate, p, limits);
    if (!best.found || ee > best.value) {
      best.found = true;
      best.value = ee;
      best.powers = {p};
    }
  }
  return best;
}

GridOptimum GridSearchEe2Serial(const FrozenLink& link, const LinkLimits& limits, double step) {
  GridOptimum best;
  const int n = GridCount(limits.p_max, step);
  for (int i = 0; i <= n; ++i) Merge(best, Row(link, limits, step, i, n));
  return best;
}

GridOptimum GridSearchEe2Parallel(const FrozenLink& link, const LinkLimits& limits, double step) {
  const int n = GridCount(limits.p_max, step);
  std::vector<GridOptimum> rows(n + 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i <= n; ++i) rows[i] = Row(link, limits, step, i, n);
  GridOptimum best;
  for (const auto& row : rows) Merge(best, row);
  return best;
}

GridOptimum GridSearchRate2(const FrozenLink& link, double p_max, double step) {
  GridOptimum best;
  const int n = GridCount(p_max, step);
  for (int i = 0; i <= n; ++i) {
    const double p1 = std::min(i * step, p_max);
    const double p2 = p_max - p1;
    const double rate = Rate(link, 0, p1) + Rate(link, 1, p2);
    ++best.evaluated;
    if (!best.found || rate > best.value) {
      best.found = true;
      best.value = rate;
      best.powers = {p1, p2};
    }
  }
  return best;
}

FrozenLink RandomD2DLink(const ScenarioConfig& config, int num_channels, Rng& rng) {
  FrozenLink link;
  const Point tx = UniformInDisk(config.cell_radius, rng);
  const double d = 1.0 + (config.d2d_max_distance - 1.0) * rng.Uniform();
  const Point rx{tx.x + d, tx.y};
  for (int k = 0; k < num_channels; ++k) {
    link.gains.push_back(GainAt(d, rng));
    const Point cell = UniformInDisk(config.cell_radius, rng);
    const double power = config.p_cell_max * rng.Uniform();
    link.interference_plus_noise.push_back(power * GainAt(Distance(cell, rx), rng) +
                                           config.noise_power);
  }
  return link;
}

FrozenLink RandomCellularLink(const ScenarioConfig& config, Rng& rng) {
  FrozenLink link;
  const Point ue = UniformInDisk(config.cell_radius, rng);
  link.gains.push_back(GainAt(Distance(ue, Point{}), rng));
  const Point d2d = UniformInDisk(config.cell_radius, rng);
  const double power = config.p_d2d_max / config.num_cellular * rng.Uniform();
  link.interference_plus_noise.push_back(power * GainAt(Distance(d2d, Point{}), rng) +
                                         config.noise_power);
  return link;
}

OracleSuiteReport RunOracleSuite(const ScenarioConfig& config, std::uint64_t seed,
                                 int num_cellular, int num_d2d, double tol, double grid_step) {
  OracleSuiteReport report;
  Rng rng(seed);

  const LinkLimits cell_limits = CellularLimits(config);
  while (static_cast<int>(report.cellular.size()) < num_cellular) {
    const FrozenLink link = RandomCellularLink(config, rng);
    const double ipn = link.interference_plus_noise[0];
    const SingleLinkOptimum oracle =
        BisectionSingleLinkEe(link.gains[0], ipn - config.noise_power, config.noise_power,
                              config.pa_efficiency, cell_limits.circuit_power, cell_limits.p_max);
    // The bisection oracle has no rate floor; keep draws where it is slack.
    if (Rate(link, 0, oracle.power) < cell_limits.r_min) {
      ++report.cellular_rejected;
      continue;
    }
    const BestResponse br = DinkelbachCellular(link, cell_limits, config.solver);
    report.cellular.push_back({br.q_star, oracle.ee, Relative(br.q_star, oracle.ee)});
  }

  const LinkLimits d2d_limits = D2DLimits(config);
  while (static_cast<int>(report.d2d.size()) < num_d2d) {
    const FrozenLink link = RandomD2DLink(config, 2, rng);
    if (!QosAttainable(link, d2d_limits)) continue;
    const GridOptimum grid = GridSearchEe2Parallel(link, d2d_limits, grid_step);
    if (!grid.found) continue;
    const BestResponse br = DinkelbachD2D(link, d2d_limits, config.solver);
    report.d2d.push_back({br.q_star, grid.value, Relative(br.q_star, grid.value)});
  }

  for (const auto& c : report.cellular) {
    report.max_cellular_error = std::max(report.max_cellular_error, c.relative_error);
  }
  for (const auto& c : report.d2d) {
    report.max_d2d_error = std::max(report.max_d2d_error, c.relative_error);
  }
  report.passes = report.max_cellular_error <= tol && report.max_d2d_error <= tol;
  return report;
}

}  // namespace d2dee
