// Copyright 2026 The wigneg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIGNEG_VERIFY_HPP
#define WIGNEG_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "wigneg/channel.hpp"
#include "wigneg/io.hpp"

namespace wigneg {

/// Max abs differences between the closed-form evolved SPATS and the three
/// independent evolution routes, all sampled on one square grid.
struct OracleTriangle {
  double closed_vs_convolution = 0.0;
  double closed_vs_fokker_planck = 0.0;
  double closed_vs_fock_ladder = 0.0;
  long convolution_points = 0;
  FokkerPlanckStats fokker_planck;
};

/// `convolution_stride` thins the grid for the convolution route only
/// (every stride-th node per axis, edges included when they fall on it).
OracleTriangle oracle_triangle(double bar_n, const ChannelParams& channel,
                               double extent = 6.0,
                               Eigen::Index resolution = 241,
                               Eigen::Index convolution_stride = 1,
                               double convolution_tol = 1e-9);

/// One JSON record per case; every record has a boolean "passed".
std::vector<Json> verify_thresholds();
std::vector<Json> verify_theorem(std::uint64_t seed, int states = 50,
                                 int cutoff = 12);
std::vector<Json> verify_oracles();

}  // namespace wigneg

#endif  // WIGNEG_VERIFY_HPP
