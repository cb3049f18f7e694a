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


#ifndef D2DEE_TESTS_TEST_UTIL_HPP
#define D2DEE_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <filesystem>
#include <string>

#include "d2dee/config.hpp"
#include "d2dee/link_model.hpp"
#include "d2dee/rng.hpp"
#include "d2dee/topology.hpp"

namespace d2dee::testing {

// Topology with every gain set to `gain` (direct and cross alike).
inline Topology UniformTopology(int n, int k_count, double gain) {
  Topology topo(n, k_count);
  for (int k = 0; k < k_count; ++k) {
    topo.cell_to_bs(k) = gain;
    for (int i = 0; i < n; ++i) {
      topo.direct(i, k) = gain;
      topo.cell_to_d2d(k, i) = gain;
      topo.d2d_to_bs(i, k) = gain;
      for (int j = 0; j < n; ++j) {
        if (j != i) topo.d2d_to_d2d(j, i, k) = gain;
      }
    }
  }
  return topo;
}

// Profile with every entry drawn uniformly inside its budget share.
inline PowerAllocation RandomAllocation(const ScenarioConfig& config, Rng& rng) {
  PowerAllocation alloc(config.num_d2d_pairs, config.num_cellular);
  for (int k = 0; k < config.num_cellular; ++k) {
    alloc.cell(k) = config.p_cell_max * rng.Uniform();
    for (int i = 0; i < config.num_d2d_pairs; ++i) {
      alloc.d2d(i, k) = config.p_d2d_max / config.num_cellular * rng.Uniform();
    }
  }
  return alloc;
}

inline double RelErr(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Fresh empty directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("d2dee_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace d2dee::testing

#endif  // D2DEE_TESTS_TEST_UTIL_HPP
