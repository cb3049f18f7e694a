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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "d2dee/fp_solver.hpp"
#include "d2dee/oracle.hpp"
#include "d2dee/regimes.hpp"
#include "test_util.hpp"

namespace d2dee {
namespace {

using testing::RelErr;

double Sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

FrozenLink Link(std::vector<double> gains, std::vector<double> ipn) {
  return {std::move(gains), std::move(ipn)};
}

// Brute force over the two-channel simplex for max rate - q * power_total
// under the rate floor.
std::vector<double> InnerGrid(const FrozenLink& link, const LinkLimits& lim, double q, double step) {
  std::vector<double> best;
  double best_value = -1e300;
  const int n = static_cast<int>(std::floor(lim.p_max / step + 1e-9));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      const double p1 = a * step;
      const double p2 = b * step;
      const double rate = std::log2(1.0 + p1 * link.gains[0] / link.interference_plus_noise[0]) +
                          std::log2(1.0 + p2 * link.gains[1] / link.interference_plus_noise[1]);
      if (rate < lim.r_min) continue;
      const double value = rate - q * ((p1 + p2) / lim.pa_efficiency + lim.circuit_power);
      if (value > best_value) {
        best_value = value;
        best = {p1, p2};
      }
    }
  }
  return best;
}

TEST_CASE("dual ascent with slack constraints is plain water-filling") {
  const FrozenLink link = Link({1e-4}, {1e-7});
  LinkLimits lim{1.0, 0.0, 0.02, 0.35};
  const DualResult r = DualAscentD2D(1.0, link, lim, SolverConfig{});
  const WaterFill wf = WaterFillD2D(1.0, 0.0, 0.0, link.interference_plus_noise, link.gains, 0.35);
  CHECK(r.feasible);
  CHECK(r.qos_multiplier == 0.0);
  CHECK(r.budget_multiplier == 0.0);
  CHECK(r.powers[0] == doctest::Approx(wf.powers[0]).epsilon(1e-12));
}

TEST_CASE("dual ascent matches a grid search on two channels") {
  const ScenarioConfig config;
  const LinkLimits lim = D2DLimits(config);
  const FrozenLink link = Link({1.0 / 225.0, 0.4 / 225.0}, {1e-7, 1e-7});
  // q = 5: budget binds; q = 100: interior; q = 3000: QoS floor binds.
  for (double q : {5.0, 100.0, 3000.0}) {
    CAPTURE(q);
    const DualResult r = DualAscentD2D(q, link, lim, config.solver);
    const auto grid = InnerGrid(link, lim, q, 1e-4);
    REQUIRE(r.feasible);
    CHECK(std::abs(r.powers[0] - grid[0]) <= 1e-3);
    CHECK(std::abs(r.powers[1] - grid[1]) <= 1e-3);
  }
}

TEST_CASE("unattainable QoS is flagged as outage") {
  const ScenarioConfig config;
  const FrozenLink link = Link({1e-9, 1e-9}, {1e-3, 1e-3});
  const DualResult r = DualAscentD2D(10.0, link, D2DLimits(config), config.solver);
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(QosAttainable(link, D2DLimits(config)));
  const BestResponse br = DinkelbachD2D(link, D2DLimits(config), config.solver);
  CHECK_FALSE(br.feasible);
  CHECK(Sum(br.powers) <= config.p_d2d_max + kFeasibilityTolerance);

  const FrozenLink cell = Link({1e-10}, {1e-2});
  CHECK_FALSE(DinkelbachCellular(cell, CellularLimits(config), config.solver).feasible);
}

TEST_CASE("q = 0 spends the whole budget") {
  const ScenarioConfig config;
  const FrozenLink link = Link({1e-3, 2e-4, 5e-5}, {1e-7, 3e-7, 1e-7});
  const DualResult r = DualAscentD2D(0.0, link, D2DLimits(config), config.solver);
  CHECK(Sum(r.powers) == doctest::Approx(config.p_d2d_max).epsilon(1e-9));
}

TEST_CASE("inner optimum satisfies KKT") {
  const ScenarioConfig config;
  const LinkLimits lim = D2DLimits(config);
  const double tol = config.solver.dual_tol;
  Rng rng(404);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const FrozenLink link = RandomD2DLink(config, 1 + trial % 3, rng);
    const double q = 500.0 * rng.Uniform();
    const DualResult r = DualAscentD2D(q, link, lim, config.solver);
    if (!r.feasible) continue;
    ++checked;
    const double rate = LinkRate(link, r.powers);
    const double spent = Sum(r.powers);
    for (double p : r.powers) REQUIRE(p >= 0.0);
    REQUIRE(rate >= lim.r_min - tol);
    REQUIRE(spent <= lim.p_max + kFeasibilityTolerance);
    REQUIRE(r.qos_multiplier >= 0.0);
    REQUIRE(r.budget_multiplier >= 0.0);
    REQUIRE(r.qos_multiplier * std::abs(rate - lim.r_min) <=
            tol * std::max(1.0, r.qos_multiplier));
    REQUIRE(r.budget_multiplier * std::abs(lim.p_max - spent) <=
            tol * std::max(1.0, r.budget_multiplier));
  }
  CHECK(checked > 200);
}

TEST_CASE("Dinkelbach agrees with bisection on a strong single channel") {
  const ScenarioConfig config;
  const LinkLimits lim = D2DLimits(config);
  const FrozenLink link = Link({1e-2}, {config.noise_power});
  const BestResponse br = DinkelbachD2D(link, lim, config.solver);
  const SingleLinkOptimum oracle = BisectionSingleLinkEe(1e-2, 0.0, config.noise_power,
                                                         config.pa_efficiency, lim.circuit_power,
                                                         lim.p_max);
  CHECK(br.converged);
  CHECK(RelErr(br.q_star, oracle.ee) <= 1e-3);
}

TEST_CASE("Dinkelbach q sequence is nondecreasing and the residual is within delta") {
  const ScenarioConfig config;
  Rng rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const bool d2d = trial % 2 == 0;
    const FrozenLink link = d2d ? RandomD2DLink(config, 3, rng) : RandomCellularLink(config, rng);
    const BestResponse br = d2d ? DinkelbachD2D(link, D2DLimits(config), config.solver)
                                : DinkelbachCellular(link, CellularLimits(config), config.solver);
    REQUIRE(br.q_trace.front() == 0.0);
    REQUIRE(std::is_sorted(br.q_trace.begin(), br.q_trace.end()));
    REQUIRE(br.q_trace.back() == br.q_star);
    if (br.converged) {
      REQUIRE(br.residual >= 0.0);
      REQUIRE(br.residual <= config.solver.delta);
    }
  }
}

TEST_CASE("interference-free default instance converges within l_max") {
  ScenarioConfig config;
  config.seed = 11;  // recorded seed
  const Topology topo = GenerateTopology(config);
  const PowerAllocation silent(config.num_d2d_pairs, config.num_cellular);
  for (int i = 0; i < config.num_d2d_pairs; ++i) {
    const BestResponse br = DinkelbachBestResponseD2D(i, silent, topo, config);
    CHECK(br.converged);
    CHECK(static_cast<int>(br.q_trace.size()) - 1 <= config.solver.l_max);
  }
}

TEST_CASE("hitting the iteration cap returns the last iterate unconverged") {
  ScenarioConfig config;
  config.solver.l_max = 1;
  const FrozenLink link = Link({1e-3}, {1e-7});
  const BestResponse br = DinkelbachD2D(link, D2DLimits(config), config.solver);
  CHECK_FALSE(br.converged);
  CHECK(br.q_trace.size() == 2);
  CHECK(br.q_star == br.q_trace.back());
  CHECK(br.q_star > 0.0);
}

TEST_CASE("cellular best response matches a fine grid") {
  const ScenarioConfig config;
  // Single cellular link, no interference, g = 4e-6. Reference values from
  // a 1e-5 W grid over [0, 0.2].
  const FrozenLink link = Link({4e-6}, {1e-7});
  const BestResponse br = DinkelbachCellular(link, CellularLimits(config), config.solver);
  CHECK(br.converged);
  CHECK(RelErr(br.q_star, 12.832069428341162) <= 1e-3);
  CHECK(std::abs(br.powers[0] - 0.01435) <= 1e-3);

  const GridOptimum grid = GridSearchEe1(link, CellularLimits(config), 1e-5);
  CHECK(grid.value == doctest::Approx(12.832069428341162).epsilon(1e-12));
}

TEST_CASE("cellular dual ascent with slack constraints is plain water-filling") {
  const FrozenLink link = Link({4e-6}, {1e-7});
  const LinkLimits lim{1.0, 0.0, 0.01, 0.35};
  const DualResult r = DualAscentCellular(1.0, link, lim, SolverConfig{});
  CHECK(r.qos_multiplier == 0.0);
  CHECK(r.budget_multiplier == 0.0);
  CHECK(r.powers[0] == doctest::Approx(0.4799432643111371).epsilon(1e-12));
}

TEST_CASE("cellular rate floor holds when it binds") {
  ScenarioConfig config;
  config.qos_cell = 3.0;
  const LinkLimits lim = CellularLimits(config);
  const FrozenLink link = Link({4e-6}, {1e-7});
  const BestResponse br = DinkelbachCellular(link, lim, config.solver);
  REQUIRE(br.feasible);
  CHECK(LinkRate(link, br.powers) >= 3.0 - config.solver.dual_tol);
  CHECK(br.powers[0] <= lim.p_max + kFeasibilityTolerance);
}

TEST_CASE("D2D best responses agree with the two-channel grid") {
  const ScenarioConfig config;
  const LinkLimits lim = D2DLimits(config);
  Rng rng(31);
  int compared = 0;
  while (compared < 5) {
    const FrozenLink link = RandomD2DLink(config, 2, rng);
    if (!QosAttainable(link, lim)) continue;
    const GridOptimum grid = GridSearchEe2Serial(link, lim, 1e-4);
    const BestResponse br = DinkelbachD2D(link, lim, config.solver);
    CHECK(RelErr(br.q_star, grid.value) <= 1e-3);
    ++compared;
  }
}

}  // namespace
}  // namespace d2dee
