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


// Brute-force reference optimizers used to validate the solvers. They share
// no code with the solvers beyond the input types: objectives are evaluated
// inline with std::log2 and maximized over a uniform power grid.

#ifndef D2DEE_ORACLE_HPP
#define D2DEE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "d2dee/config.hpp"
#include "d2dee/fp_solver.hpp"
#include "d2dee/rng.hpp"

namespace d2dee {

struct GridOptimum {
  std::vector<double> powers;
  double value = 0.0;      // objective at `powers`
  bool found = false;      // some grid point satisfied the constraints
  long long evaluated = 0; // grid points visited
};

// max rate/power_total over p in {0, step, 2 step, ...} <= p_max subject to
// the QoS floor. Single channel.
GridOptimum GridSearchEe1(const FrozenLink& link, const LinkLimits& limits, double step);

// Same over the two-channel simplex p1 + p2 <= p_max. The serial version is
// the reference; the parallel one splits rows across OpenMP threads and
// reduces in row order, so both return the same point.
GridOptimum GridSearchEe2Serial(const FrozenLink& link, const LinkLimits& limits, double step);
GridOptimum GridSearchEe2Parallel(const FrozenLink& link, const LinkLimits& limits, double step);

// max rate over the two-channel budget line p1 + p2 = p_max.
GridOptimum GridSearchRate2(const FrozenLink& link, double p_max, double step);

// Random frozen links drawn from the default geometry: a direct link at
// distance U(1, d_max) (D2D) or uniform in the cell (cellular), Rayleigh
// fading, and interference from one random co-channel transmitter at a
// random power.
FrozenLink RandomD2DLink(const ScenarioConfig& config, int num_channels, Rng& rng);
FrozenLink RandomCellularLink(const ScenarioConfig& config, Rng& rng);

struct OracleCase {
  double solver = 0.0;
  double oracle = 0.0;
  double relative_error = 0.0;
};

struct OracleSuiteReport {
  std::vector<OracleCase> cellular;  // Dinkelbach vs bisection
  std::vector<OracleCase> d2d;       // Dinkelbach vs 2-D grid
  int cellular_rejected = 0;         // draws skipped because QoS was binding
  double max_cellular_error = 0.0;
  double max_d2d_error = 0.0;
  bool passes = false;
};

// Runs `num_cellular` single-link cellular comparisons and `num_d2d`
// two-channel D2D comparisons against tolerance `tol` (relative).
OracleSuiteReport RunOracleSuite(const ScenarioConfig& config, std::uint64_t seed,
                                 int num_cellular = 100, int num_d2d = 50, double tol = 1e-3,
                                 double grid_step = 1e-4);

}  // namespace d2dee

#endif  // D2DEE_ORACLE_HPP
