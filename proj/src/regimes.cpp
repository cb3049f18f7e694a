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

#include "d2dee/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace d2dee {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Ratio(double num, double den) {
  if (den == 0.0) return num > 0.0 ? kInf : 0.0;
  return num / den;
}

struct Extremes {
  double min = kInf;
  double max = 0.0;
  void Add(double v) {
    min = std::min(min, v);
    max = std::max(max, v);
  }
};

Extremes D2DPowers(const PowerAllocation& alloc) {
  Extremes e;
  for (double p : alloc.d2d_flat()) e.Add(p);
  return e;
}

Extremes CellPowers(const PowerAllocation& alloc) {
  Extremes e;
  for (double p : alloc.cell_flat()) e.Add(p);
  return e;
}

Extremes AllPowers(const PowerAllocation& alloc) {
  Extremes e = D2DPowers(alloc);
  for (double p : alloc.cell_flat()) e.Add(p);
  return e;
}

// Every interference term of the network: at each D2D receiver on each
// channel and at the BS on each channel.
Extremes Interference(const Topology& topo, const PowerAllocation& alloc) {
  Extremes e;
  for (int k = 0; k < topo.num_channels(); ++k) {
    for (int i = 0; i < topo.num_d2d(); ++i) e.Add(InterferenceD2D(i, k, alloc, topo));
    e.Add(InterferenceCellular(k, alloc, topo));
  }
  return e;
}

// Network EE with selected SINR and power-model terms dropped.
struct Simplification {
  bool keep_noise = true;
  bool keep_interference = true;
  bool keep_cellular_at_d2d = true;  // p_c g_{c,i} in the D2D denominator
  bool include_d2d = true;
  bool include_cellular = true;
  bool keep_circuit = true;
};

double SimplifiedEe(const Topology& topo, const PowerAllocation& alloc,
                    const ScenarioConfig& config, const Simplification& s) {
  const double noise = s.keep_noise ? config.noise_power : 0.0;
  const double circuit = s.keep_circuit ? config.p_cir : 0.0;
  auto sinr = [](double signal, double denom) {
    if (signal == 0.0) return 0.0;
    return denom == 0.0 ? kInf : signal / denom;
  };
  double total = 0.0;
  if (s.include_d2d) {
    for (int i = 0; i < topo.num_d2d(); ++i) {
      double rate = 0.0;
      for (int k = 0; k < topo.num_channels(); ++k) {
        double interference = 0.0;
        if (s.keep_interference) {
          if (s.keep_cellular_at_d2d) interference = alloc.cell(k) * topo.cell_to_d2d(k, i);
          for (int j = 0; j < topo.num_d2d(); ++j) {
            if (j != i) interference += alloc.d2d(j, k) * topo.d2d_to_d2d(j, i, k);
          }
        }
        rate += Log2OnePlus(sinr(alloc.d2d(i, k) * topo.direct(i, k), interference + noise));
      }
      total += EnergyEfficiency(rate, alloc.d2d_sum(i) / config.pa_efficiency + 2.0 * circuit);
    }
  }
  if (s.include_cellular) {
    for (int k = 0; k < topo.num_cellular(); ++k) {
      const double interference = s.keep_interference ? InterferenceCellular(k, alloc, topo) : 0.0;
      const double rate =
          Log2OnePlus(sinr(alloc.cell(k) * topo.cell_to_bs(k), interference + noise));
      total += EnergyEfficiency(rate, alloc.cell(k) / config.pa_efficiency + circuit);
    }
  }
  return total;
}

}  // namespace

std::string ToString(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::kCircuitDominated: return "circuit_dominated";
    case RegimeTag::kTransmissionDominated: return "transmission_dominated";
    case RegimeTag::kNoiseDominated: return "noise_dominated";
    case RegimeTag::kInterferenceDominated: return "interference_dominated";
    case RegimeTag::kCellularDominated: return "cellular_dominated";
    case RegimeTag::kD2DDominated: return "d2d_dominated";
    case RegimeTag::kNone: return "none";
  }
  return "none";
}

double DominanceRatio(RegimeTag tag, const Topology& topo, const PowerAllocation& alloc,
                      const ScenarioConfig& config) {
  switch (tag) {
    case RegimeTag::kCircuitDominated:
      return Ratio(config.p_cir, AllPowers(alloc).max);
    case RegimeTag::kTransmissionDominated:
      return Ratio(AllPowers(alloc).min, config.p_cir);
    case RegimeTag::kNoiseDominated:
      return Ratio(config.noise_power, Interference(topo, alloc).max);
    case RegimeTag::kInterferenceDominated:
      return Ratio(Interference(topo, alloc).min, config.noise_power);
    case RegimeTag::kCellularDominated:
      return Ratio(CellPowers(alloc).min, D2DPowers(alloc).max);
    case RegimeTag::kD2DDominated:
      return Ratio(D2DPowers(alloc).min, CellPowers(alloc).max);
    case RegimeTag::kNone:
      return 0.0;
  }
  return 0.0;
}

Regime ClassifyRegime(const Topology& topo, const PowerAllocation& alloc,
                      const ScenarioConfig& config, double threshold) {
  Regime best;
  for (RegimeTag tag : kRegimePrecedence) {
    const double ratio = DominanceRatio(tag, topo, alloc, config);
    if (ratio > threshold) return {tag, ratio};
    best.dominance_ratio = std::max(best.dominance_ratio, ratio);
  }
  return best;
}

double RegimeApproxEe(const Topology& topo, const PowerAllocation& alloc,
                      const ScenarioConfig& config, RegimeTag tag) {
  switch (tag) {
    case RegimeTag::kCircuitDominated: {
      // Transmit power dropped from every denominator:
      // (1 / 2 p_cir) [sum_i sum_k log2(1 + g_i^k) + sum_k 2 log2(1 + g_c^k)].
      double weighted = 0.0;
      for (int i = 0; i < topo.num_d2d(); ++i) {
        weighted += RateD2D(i, alloc, topo, config.noise_power);
      }
      for (int k = 0; k < topo.num_cellular(); ++k) {
        weighted += 2.0 * RateCellular(k, alloc, topo, config.noise_power);
      }
      return weighted / (2.0 * config.p_cir);
    }
    case RegimeTag::kTransmissionDominated:
      return SimplifiedEe(topo, alloc, config, {.keep_circuit = false});
    case RegimeTag::kNoiseDominated:
      return SimplifiedEe(topo, alloc, config, {.keep_interference = false});
    case RegimeTag::kInterferenceDominated:
      return SimplifiedEe(topo, alloc, config, {.keep_noise = false});
    case RegimeTag::kCellularDominated:
      return SimplifiedEe(topo, alloc, config, {.keep_interference = false, .include_d2d = false});
    case RegimeTag::kD2DDominated:
      return SimplifiedEe(topo, alloc, config,
                          {.keep_cellular_at_d2d = false, .include_cellular = false});
    case RegimeTag::kNone:
      return NetworkEe(alloc, topo, config);
  }
  return NetworkEe(alloc, topo, config);
}

SingleLinkOptimum BisectionSingleLinkEe(double gain, double interference, double noise_power,
                                        double pa_efficiency, double circuit_power, double p_max) {
  if (!(gain > 0.0)) throw DomainError("bisection: gain must be > 0");
  if (!(interference + noise_power > 0.0)) {
    throw DomainError("bisection: interference plus noise must be > 0");
  }
  const double snr_per_watt = gain / (interference + noise_power);
  auto ee = [&](double p) {
    return EnergyEfficiency(Log2OnePlus(p * snr_per_watt), p / pa_efficiency + circuit_power);
  };
  if (circuit_power <= 0.0) {
    // Ratio decreases from its p -> 0 limit.
    return {0.0, snr_per_watt * pa_efficiency * std::numbers::log2e};
  }
  // Sign of d/dp [rate / power_total].
  auto slope = [&](double p) {
    const double x = p * snr_per_watt;
    return snr_per_watt * std::numbers::log2e / (1.0 + x) * (p / pa_efficiency + circuit_power) -
           Log2OnePlus(x) / pa_efficiency;
  };
  if (slope(p_max) >= 0.0) return {p_max, ee(p_max)};
  double lo = 0.0;
  double hi = p_max;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  const double p = 0.5 * (lo + hi);
  return {p, ee(p)};
}

}  // namespace d2dee
