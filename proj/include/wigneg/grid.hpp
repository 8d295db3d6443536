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

#ifndef WIGNEG_GRID_HPP
#define WIGNEG_GRID_HPP

#include <Eigen/Dense>

#include "wigneg/wigner.hpp"

namespace wigneg {

struct GridExtents {
  double q_min = -1.0;
  double q_max = 1.0;
  double p_min = -1.0;
  double p_max = 1.0;

  static GridExtents square(double half_width) {
    return {-half_width, half_width, -half_width, half_width};
  }
};

inline constexpr Eigen::Index kDefaultResolution = 201;

/// Default half-width: max(5, 5 sqrt(1 + 2 max(bar_n, n))).
double default_extent(double bar_n, double n);

/// Uniform nq x np sampling of a phase-space function. values()(i, j) is the
/// value at (q(i), p(j)); serialization walks i outer, j inner.
class WignerGrid {
 public:
  WignerGrid(const GridExtents& extents, Eigen::Index nq, Eigen::Index np,
             double normalization_tol = 1e-6);

  const GridExtents& extents() const noexcept { return extents_; }
  Eigen::Index nq() const noexcept { return values_.rows(); }
  Eigen::Index np() const noexcept { return values_.cols(); }
  double dq() const { return (extents_.q_max - extents_.q_min) / double(nq() - 1); }
  double dp() const { return (extents_.p_max - extents_.p_min) / double(np() - 1); }
  double cell_area() const { return dq() * dp(); }
  double q(Eigen::Index i) const { return extents_.q_min + double(i) * dq(); }
  double p(Eigen::Index j) const { return extents_.p_min + double(j) * dp(); }
  double normalization_tol() const noexcept { return normalization_tol_; }

  Eigen::ArrayXXd& values() noexcept { return values_; }
  const Eigen::ArrayXXd& values() const noexcept { return values_; }

  /// Tensor-product trapezoidal rule.
  double trapezoid_integral() const;
  bool is_normalized() const;

 private:
  GridExtents extents_;
  Eigen::ArrayXXd values_;
  double normalization_tol_;
};

WignerGrid sample_grid(const PhaseFunction& f, const GridExtents& extents,
                       Eigen::Index nq, Eigen::Index np);

}  // namespace wigneg

#endif  // WIGNEG_GRID_HPP
