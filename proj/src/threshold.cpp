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

#include "wigneg/threshold.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "wigneg/errors.hpp"
#include "wigneg/grid.hpp"
#include "wigneg/quadrature.hpp"
#include "wigneg/wigner.hpp"

namespace wigneg {

double threshold_spats(double n) {
  if (!(n >= 0.0)) throw DomainError("channel n must be >= 0");
  return std::log1p(1.0 / (1.0 + 2.0 * n));
}

double threshold_general(double gamma_tc_loss, double n) {
  if (!(n >= 0.0) || !(gamma_tc_loss >= 0.0)) {
    throw DomainError("threshold_general needs non-negative arguments");
  }
  return std::log((std::exp(gamma_tc_loss) + 2.0 * n) / (1.0 + 2.0 * n));
}

ThresholdReport threshold_numeric_spats(double n, double bar_n, double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-3)) {
    throw DomainError("threshold tolerance must lie in [1e-12, 1e-3]");
  }
  if (!(n >= 0.0) || !(bar_n >= 0.0)) {
    throw DomainError("threshold_numeric_spats needs n, bar_n >= 0");
  }
  auto origin = [n, bar_n](double gamma_t) {
    return spats_wigner_evolved<double>(PhasePointd{0.0, 0.0}, n, gamma_t,
                                        bar_n);
  };
  ThresholdReport report;
  report.n = n;
  report.bar_n = bar_n;
  report.method = ThresholdMethod::kOriginSignRoot;
  report.gamma_t_c_analytic = threshold_spats(n);
  report.gamma_t_c_numeric = bisect_root(origin, 0.0, 2.0, tol, 60);
  report.residual =
      std::abs(report.gamma_t_c_analytic - report.gamma_t_c_numeric);
  return report;
}

TheoremReport verify_zero_vacuum_theorem(const FockDiagonalState& state,
                                         double n, std::string state_id,
                                         const TheoremGridSpec& grid_spec,
                                         const TheoremTolerances& tols) {
  if (vacuum_population(state) != 0.0) {
    throw DomainError("zero-vacuum theorem needs <0|rho|0> = 0, got " +
                      std::to_string(vacuum_population(state)));
  }
  TheoremReport report;
  report.state_id = std::move(state_id);
  report.n = n;
  report.gamma_t_c = threshold_spats(n);

  const FockDiagonalState evolved = evolve_fock_diagonal(
      state, ChannelParams{n, report.gamma_t_c}, tols.step_tol);
  report.cutoff = evolved.cutoff();

  auto w = [&evolved](const PhasePointd& pt) {
    return fock_diagonal_wigner(pt, evolved);
  };
  const GridExtents extents = GridExtents::square(grid_spec.extent);
  const WignerGrid w_grid =
      sample_grid(w, extents, grid_spec.resolution, grid_spec.resolution);
  report.w_origin_at_threshold = w(PhasePointd{0.0, 0.0});
  report.min_w_at_threshold = w_grid.values().minCoeff();

  bool identity_ok = true;
  if (n == 0.0) {
    const double root2 = std::numbers::sqrt2;
    const WignerGrid q_grid = sample_grid(
        [&state, root2](const PhasePointd& pt) {
          return q_function(PhasePointd{root2 * pt.q, root2 * pt.p}, state);
        },
        extents, grid_spec.resolution, grid_spec.resolution);
    // Both distributions are normalized, which fixes the constant.
    report.q_identity_constant =
        w_grid.trapezoid_integral() / q_grid.trapezoid_integral();
    report.q_identity_residual =
        (w_grid.values() - 2.0 * q_grid.values()).abs().maxCoeff();
    identity_ok = *report.q_identity_residual < tols.q_identity &&
                  std::abs(*report.q_identity_constant - 2.0) < tols.q_identity;
  }

  report.passed = std::abs(report.w_origin_at_threshold) < tols.origin &&
                  report.min_w_at_threshold > -tols.min && identity_ok;
  return report;
}

}  // namespace wigneg
