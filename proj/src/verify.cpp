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

#include "wigneg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wigneg/threshold.hpp"

namespace wigneg {

OracleTriangle oracle_triangle(double bar_n, const ChannelParams& channel,
                               double extent, Eigen::Index resolution,
                               Eigen::Index convolution_stride,
                               double convolution_tol) {
  OracleTriangle out;
  const GridExtents extents = GridExtents::square(extent);
  const WignerGrid closed = sample_grid(
      [&](const PhasePointd& pt) {
        return spats_wigner_evolved(pt, channel, bar_n);
      },
      extents, resolution, resolution);

  const PhaseFunction initial = [bar_n](const PhasePointd& pt) {
    return spats_wigner_initial(pt, bar_n);
  };
  ConvolutionSpec conv;
  conv.abs_tol = convolution_tol;
  const Eigen::Index stride = std::max<Eigen::Index>(convolution_stride, 1);
  for (Eigen::Index i = 0; i < resolution; i += stride) {
    for (Eigen::Index j = 0; j < resolution; j += stride) {
      const double v = convolve_evolve(
          initial, channel, PhasePointd{closed.q(i), closed.p(j)}, conv);
      out.closed_vs_convolution = std::max(
          out.closed_vs_convolution, std::abs(v - closed.values()(i, j)));
      ++out.convolution_points;
    }
  }

  const WignerGrid start = sample_grid(initial, extents, resolution, resolution);
  const WignerGrid fp = fokker_planck_evolve(start, channel, {}, &out.fokker_planck);
  out.closed_vs_fokker_planck =
      (fp.values() - closed.values()).abs().maxCoeff();

  const FockDiagonalState evolved =
      evolve_fock_diagonal(spats_weights(bar_n), channel, 1e-12);
  const WignerGrid ladder = sample_grid(
      [&evolved](const PhasePointd& pt) {
        return fock_diagonal_wigner(pt, evolved);
      },
      extents, resolution, resolution);
  out.closed_vs_fock_ladder =
      (ladder.values() - closed.values()).abs().maxCoeff();
  return out;
}

std::vector<Json> verify_thresholds() {
  std::vector<Json> records;
  const double bar_ns[] = {0.0, 3.0 / 7.0, 1.0, 10.0};
  for (double n : {0.0, 0.5, 1.0, 2.0}) {
    double lo = INFINITY, hi = -INFINITY;
    for (double bar_n : bar_ns) {
      const ThresholdReport r = threshold_numeric_spats(n, bar_n, 1e-12);
      Json j = to_json(r);
      j["check"] = "numeric-threshold";
      j["tolerance"] = 1e-8;
      j["passed"] = r.residual < 1e-8;
      records.push_back(std::move(j));
      lo = std::min(lo, r.gamma_t_c_numeric);
      hi = std::max(hi, r.gamma_t_c_numeric);
    }
    records.push_back(Json{{"check", "bar_n-independence"},
                           {"n", n},
                           {"spread", hi - lo},
                           {"tolerance", 1e-8},
                           {"passed", hi - lo < 1e-8}});
  }
  for (double n : {0.0, 0.25, 0.5, 1.0, 5.0}) {
    const double diff =
        std::abs(threshold_general(threshold_spats(0.0), n) - threshold_spats(n));
    records.push_back(Json{{"check", "loss-to-thermal-map"},
                           {"n", n},
                           {"difference", diff},
                           {"tolerance", 1e-14},
                           {"passed", diff < 1e-14}});
  }
  return records;
}

std::vector<Json> verify_theorem(std::uint64_t seed, int states, int cutoff) {
  std::vector<Json> records;
  for (int k = 0; k < states; ++k) {
    const std::uint64_t state_seed = seed + std::uint64_t(k);
    const FockDiagonalState state = random_zero_vacuum_state(state_seed, cutoff);
    for (double n : {0.0, 0.5, 1.0}) {
      const TheoremReport r = verify_zero_vacuum_theorem(
          state, n, "random-" + std::to_string(state_seed));
      Json j = to_json(r);
      j["seed"] = state_seed;
      records.push_back(std::move(j));
    }
  }
  return records;
}

std::vector<Json> verify_oracles() {
  const double bar_n = 1.0;
  const ChannelParams channel{0.5, 0.3};
  const OracleTriangle t = oracle_triangle(bar_n, channel);
  Json base{{"bar_n", bar_n}, {"n", channel.n}, {"gamma_t", channel.gamma_t}};
  auto record = [&base](const char* route, double diff, double tol) {
    Json j = base;
    j["check"] = route;
    j["max_abs_diff"] = diff;
    j["tolerance"] = tol;
    j["passed"] = diff < tol;
    return j;
  };
  std::vector<Json> records;
  records.push_back(record("closed-vs-convolution", t.closed_vs_convolution, 1e-8));
  records.push_back(record("closed-vs-fokker-planck", t.closed_vs_fokker_planck, 1e-3));
  records.push_back(record("closed-vs-fock-ladder", t.closed_vs_fock_ladder, 1e-6));
  records.push_back(record("fokker-planck-mass-drift",
                           std::abs(t.fokker_planck.mass_drift()), 1e-3));
  return records;
}

}  // namespace wigneg
