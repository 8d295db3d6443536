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

#include "wigneg/wigner.hpp"

#include <cmath>
#include <numbers>

namespace wigneg {

double fock_diagonal_wigner(const PhasePointd& pt,
                            const FockDiagonalState& state) {
  const auto& w = state.weights();
  const Eigen::Index top = state.cutoff();
  if (top > kMaxLaguerreIndex) check_laguerre_index(int(top));
  const double x = 4.0 * pt.radius_squared();

  // Same recurrence as scaled_laguerre, accumulating (-1)^l p_l L_l as we go.
  double prev = std::exp(-0.5 * x);
  double cur = (1.0 - x) * prev;
  double sum = w[0] * prev - w[1] * cur;
  for (Eigen::Index k = 1; k < top; ++k) {
    const double next =
        ((2.0 * double(k) + 1.0 - x) * cur - double(k) * prev) / double(k + 1);
    prev = cur;
    cur = next;
    sum += ((k + 1) % 2 == 0 ? w[k + 1] : -w[k + 1]) * cur;
  }
  return 2.0 / std::numbers::pi * sum;
}

double q_function(const PhasePointd& pt, const FockDiagonalState& state) {
  const auto& w = state.weights();
  const double r2 = pt.radius_squared();
  double sum = 0.0;
  if (r2 < 600.0) {
    double term = std::exp(-r2);  // e^{-r^2} r^{2l} / l!
    sum = w[0] * term;
    for (Eigen::Index l = 1; l < w.size(); ++l) {
      term *= r2 / double(l);
      sum += w[l] * term;
    }
  } else {
    const double log_r2 = std::log(r2);
    for (Eigen::Index l = 0; l < w.size(); ++l) {
      if (w[l] == 0.0) continue;
      sum += w[l] * std::exp(-r2 + double(l) * log_r2 -
                             std::lgamma(double(l) + 1.0));
    }
  }
  return sum / std::numbers::pi;
}

}  // namespace wigneg
