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


#include <cmath>

#include "doctest.h"

#include "d2dee/link_model.hpp"
#include "test_util.hpp"

namespace d2dee {
namespace {

using testing::RandomAllocation;
using testing::UniformTopology;

TEST_CASE("D2D SINR") {
  Topology topo = UniformTopology(2, 1, 0.0);
  topo.direct(0, 0) = 1e-4;
  topo.cell_to_d2d(0, 0) = 1e-5;
  PowerAllocation alloc(2, 1);

  CHECK(SinrD2D(0, 0, alloc, topo, 1e-7) == 0.0);

  alloc.d2d(0, 0) = 0.1;
  CHECK(SinrD2D(0, 0, alloc, topo, 1e-7) == doctest::Approx(100.0).epsilon(1e-14));

  alloc.cell(0) = 0.1;
  CHECK(SinrD2D(0, 0, alloc, topo, 1e-7) == doctest::Approx(9.090909090909092).epsilon(1e-14));
}

TEST_CASE("cellular SINR") {
  Topology topo = UniformTopology(1, 1, 0.0);
  topo.cell_to_bs(0) = 4e-6;
  topo.d2d_to_bs(0, 0) = 1e-6;
  PowerAllocation alloc(1, 1);
  CHECK(SinrCellular(0, alloc, topo, 1e-7) == 0.0);

  alloc.cell(0) = 0.2;
  CHECK(SinrCellular(0, alloc, topo, 1e-7) == doctest::Approx(8.0).epsilon(1e-14));

  alloc.d2d(0, 0) = 0.1;
  CHECK(SinrCellular(0, alloc, topo, 1e-7) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("rates sum log2(1 + SINR) over channels") {
  Topology topo = UniformTopology(1, 2, 0.0);
  topo.direct(0, 0) = 1e-6;
  topo.direct(0, 1) = 3e-6;
  topo.cell_to_bs(0) = 1e-6;
  topo.cell_to_bs(1) = 8e-6;
  PowerAllocation alloc(1, 2);
  CHECK(RateD2D(0, alloc, topo, 1e-7) == 0.0);
  CHECK(RateCellular(0, alloc, topo, 1e-7) == 0.0);

  // SINR 1 and 3: exactly 1 + 2 bits.
  alloc.d2d(0, 0) = 0.1;
  alloc.d2d(0, 1) = 0.1;
  CHECK(RateD2D(0, alloc, topo, 1e-7) == doctest::Approx(3.0).epsilon(1e-14));

  alloc = PowerAllocation(1, 2);
  alloc.cell(0) = 0.1;
  alloc.cell(1) = 0.1;
  CHECK(RateCellular(0, alloc, topo, 1e-7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(RateCellular(1, alloc, topo, 1e-7) == doctest::Approx(3.169925001442312).epsilon(1e-14));

  Topology one = UniformTopology(1, 1, 1e-4);
  PowerAllocation p(1, 1);
  p.d2d(0, 0) = 0.1;
  CHECK(RateD2D(0, p, one, 1e-7) == doctest::Approx(6.658211482751795).epsilon(1e-14));
}

TEST_CASE("total power") {
  PowerAllocation alloc(1, 2);
  CHECK(PowerTotalD2D(0, alloc, 0.35, 0.01) == doctest::Approx(0.02));
  CHECK(PowerTotalCellular(0, alloc, 0.35, 0.01) == doctest::Approx(0.01));

  alloc.d2d(0, 0) = 0.15;
  alloc.d2d(0, 1) = 0.05;
  alloc.cell(0) = 0.2;
  CHECK(PowerTotalD2D(0, alloc, 0.35, 0.01) == doctest::Approx(0.5914285714285715).epsilon(1e-14));
  CHECK(PowerTotalCellular(0, alloc, 0.35, 0.01) ==
        doctest::Approx(0.5814285714285715).epsilon(1e-14));

  alloc.d2d(0, 0) = 0.05;
  alloc.cell(0) = 0.1;
  CHECK(PowerTotalD2D(0, alloc, 1.0, 0.01) == doctest::Approx(0.12));
  CHECK(PowerTotalCellular(0, alloc, 0.5, 0.01) == doctest::Approx(0.21));
}

TEST_CASE("energy efficiency") {
  CHECK(EnergyEfficiency(3.0, 0.6) == doctest::Approx(5.0));
  CHECK(EnergyEfficiency(0.0, 0.0) == 0.0);

  const ScenarioConfig config;
  const Topology topo = UniformTopology(5, 3, 1e-4);
  const PowerAllocation silent(5, 3);
  CHECK(EeD2D(0, silent, topo, config) == 0.0);
  CHECK(EeCellular(0, silent, topo, config) == 0.0);
  CHECK(NetworkEe(silent, topo, config) == 0.0);
}

TEST_CASE("network EE of a single active link is that link's EE") {
  ScenarioConfig config;
  config.num_d2d_pairs = 1;
  config.num_cellular = 1;
  config.p_cir = 0.01;
  config.pa_efficiency = 0.5;
  // rate 3 bit/s/Hz at 0.2 W: SINR 7, total 0.2 / 0.5 + 0.02 = 0.42.
  Topology topo = UniformTopology(1, 1, 0.0);
  topo.direct(0, 0) = 7.0 * config.noise_power / 0.2;
  topo.cell_to_bs(0) = 1e-6;
  PowerAllocation alloc(1, 1);
  alloc.d2d(0, 0) = 0.2;
  CHECK(EeD2D(0, alloc, topo, config) == doctest::Approx(3.0 / 0.42).epsilon(1e-14));
  CHECK(NetworkEe(alloc, topo, config) == EeD2D(0, alloc, topo, config));
}

TEST_CASE("EE is rate over total power and network EE sums the links") {
  ScenarioConfig config;
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    config.seed = trial;
    const Topology topo = GenerateTopology(config);
    const PowerAllocation alloc = RandomAllocation(config, rng);
    double sum = 0.0;
    for (int i = 0; i < config.num_d2d_pairs; ++i) {
      const LinkMetrics m = MetricsD2D(i, alloc, topo, config);
      REQUIRE(m.ee == RateD2D(i, alloc, topo, config.noise_power) /
                          PowerTotalD2D(i, alloc, config.pa_efficiency, config.p_cir));
      REQUIRE(m.ee == EeD2D(i, alloc, topo, config));
      REQUIRE(m.power_total >= 2.0 * config.p_cir);
      sum += m.ee;
    }
    for (int k = 0; k < config.num_cellular; ++k) {
      const LinkMetrics m = MetricsCellular(k, alloc, topo, config);
      REQUIRE(m.ee == RateCellular(k, alloc, topo, config.noise_power) /
                          PowerTotalCellular(k, alloc, config.pa_efficiency, config.p_cir));
      REQUIRE(m.power_total >= config.p_cir);
      sum += m.ee;
    }
    REQUIRE(NetworkEe(alloc, topo, config) == doctest::Approx(sum).epsilon(1e-14));
  }
}

TEST_CASE("rate grows with own power and shrinks with interferer power") {
  ScenarioConfig config;
  config.seed = 5;
  const Topology topo = GenerateTopology(config);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    PowerAllocation alloc = RandomAllocation(config, rng);
    const int i = trial % config.num_d2d_pairs;
    const int k = trial % config.num_cellular;
    const double base = RateD2D(i, alloc, topo, config.noise_power);

    PowerAllocation louder = alloc;
    louder.d2d(i, k) += 0.01;
    REQUIRE(RateD2D(i, louder, topo, config.noise_power) >= base);

    PowerAllocation noisier = alloc;
    noisier.d2d((i + 1) % config.num_d2d_pairs, k) += 0.01;
    REQUIRE(RateD2D(i, noisier, topo, config.noise_power) <= base);
    noisier = alloc;
    noisier.cell(k) += 0.01;
    REQUIRE(RateD2D(i, noisier, topo, config.noise_power) <= base);
  }
}

TEST_CASE("without circuit power the single-link EE falls as power rises") {
  ScenarioConfig config;
  config.p_cir = 0.0;
  config.num_d2d_pairs = 1;
  config.num_cellular = 1;
  Topology topo = UniformTopology(1, 1, 0.0);
  topo.direct(0, 0) = 1e-4;
  topo.cell_to_bs(0) = 1e-6;
  const double h = 1e-6;
  for (double p = 1e-4; p < 0.2; p *= 1.5) {
    PowerAllocation a(1, 1);
    PowerAllocation b(1, 1);
    a.d2d(0, 0) = p;
    b.d2d(0, 0) = p + h;
    REQUIRE(EeD2D(0, b, topo, config) < EeD2D(0, a, topo, config));
  }
}

TEST_CASE("log2(1 + x) keeps precision for tiny x") {
  CHECK(Log2OnePlus(0.0) == 0.0);
  CHECK(Log2OnePlus(1e-12) == doctest::Approx(1e-12 / std::log(2.0)).epsilon(1e-12));
  CHECK(Log2OnePlus(1.0) == 1.0);
  CHECK(Log2OnePlus(3.0) == 2.0);
}

TEST_CASE("budget checks and profile distance") {
  ScenarioConfig config;
  PowerAllocation alloc(config.num_d2d_pairs, config.num_cellular);
  CHECK(SatisfiesBudgets(alloc, config));
  alloc.d2d(0, 0) = 0.1;
  alloc.d2d(0, 1) = 0.1 + 0.5 * kFeasibilityTolerance;
  CHECK(SatisfiesBudgets(alloc, config));
  alloc.d2d(0, 2) = 1e-6;
  CHECK_FALSE(SatisfiesBudgets(alloc, config));

  PowerAllocation other(config.num_d2d_pairs, config.num_cellular);
  other.cell(2) = -0.5;
  CHECK_FALSE(SatisfiesBudgets(other, config));
  CHECK(MaxAbsDifference(alloc, other) == doctest::Approx(0.5));
}

}  // namespace
}  // namespace d2dee
