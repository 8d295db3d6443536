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

#include "wigneg/grid.hpp"

#include <algorithm>
#include <cmath>

#include "wigneg/errors.hpp"

namespace wigneg {

namespace {

Eigen::ArrayXd trapezoid_weights(Eigen::Index count, double step) {
  Eigen::ArrayXd w = Eigen::ArrayXd::Constant(count, step);
  w[0] *= 0.5;
  w[count - 1] *= 0.5;
  return w;
}

}  // namespace

double default_extent(double bar_n, double n) {
  return std::max(5.0, 5.0 * std::sqrt(1.0 + 2.0 * std::max(bar_n, n)));
}

WignerGrid::WignerGrid(const GridExtents& extents, Eigen::Index nq,
                       Eigen::Index np, double normalization_tol)
    : extents_(extents),
      values_(Eigen::ArrayXXd::Zero(nq, np)),
      normalization_tol_(normalization_tol) {
  if (nq < 2 || np < 2) throw ConfigError("grid needs at least 2 points per axis");
  if (!(extents.q_min < extents.q_max) || !(extents.p_min < extents.p_max) ||
      !std::isfinite(extents.q_min) || !std::isfinite(extents.q_max) ||
      !std::isfinite(extents.p_min) || !std::isfinite(extents.p_max)) {
    throw ConfigError("grid extents must be finite and ordered");
  }
}

double WignerGrid::trapezoid_integral() const {
  const Eigen::ArrayXd wq = trapezoid_weights(nq(), dq());
  const Eigen::ArrayXd wp = trapezoid_weights(np(), dp());
  return (wq.matrix().transpose() * values_.matrix() * wp.matrix()).value();
}

bool WignerGrid::is_normalized() const {
  return std::abs(trapezoid_integral() - 1.0) <= normalization_tol_;
}

WignerGrid sample_grid(const PhaseFunction& f, const GridExtents& extents,
                       Eigen::Index nq, Eigen::Index np) {
  WignerGrid grid(extents, nq, np);
  auto& v = grid.values();
  for (Eigen::Index i = 0; i < nq; ++i) {
    const double q = grid.q(i);
    for (Eigen::Index j = 0; j < np; ++j) {
      v(i, j) = f(PhasePointd{q, grid.p(j)});
    }
  }
  return grid;
}

}  // namespace wigneg
