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

#ifndef WIGNEG_QUADRATURE_HPP
#define WIGNEG_QUADRATURE_HPP

#include <functional>

#include <Eigen/Dense>

namespace wigneg {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  int order() const { return int(nodes.size()); }
};

/// Newton iteration on the Legendre three-term recurrence; order >= 1.
GaussLegendreRule gauss_legendre(int order);

/// Adaptive Gauss-Legendre on [a, b]: an interval is accepted when the
/// 10-point rule and the sum of the two half-interval rules agree to the
/// locally apportioned tolerance. Throws NumericalError when max_depth is hit
/// with the estimate still unsettled.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth = 40);

/// Bisection for a sign change of f on [lo, hi]. Stops once the bracket is
/// narrower than `tol` or after `max_iter` halvings. Throws NumericalError if
/// f(lo) and f(hi) share a strict sign.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double tol, int max_iter = 200);

}  // namespace wigneg

#endif  // WIGNEG_QUADRATURE_HPP
