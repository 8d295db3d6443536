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

#ifndef WIGNEG_THRESHOLD_HPP
#define WIGNEG_THRESHOLD_HPP

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "wigneg/states.hpp"

namespace wigneg {

/// Decay time at which the evolved SPATS Wigner function stops being
/// negative anywhere: ln((2 + 2n) / (1 + 2n)). Independent of bar_n.
double threshold_spats(double n);

/// Maps a photon-loss threshold to a thermal channel:
/// ln((e^{gt_c(0)} + 2n) / (1 + 2n)).
double threshold_general(double gamma_tc_loss, double n);

enum class ThresholdMethod { kOriginSignRoot, kPnwVanishing };

struct ThresholdReport {
  double n = 0.0;
  double bar_n = 0.0;
  double gamma_t_c_analytic = 0.0;
  double gamma_t_c_numeric = 0.0;
  ThresholdMethod method = ThresholdMethod::kOriginSignRoot;
  double residual = 0.0;  // |analytic - numeric|
};

/// Bisection on gamma_t in [0, 2] for the sign change of the evolved SPATS
/// Wigner function at the origin. tol in [1e-12, 1e-3].
ThresholdReport threshold_numeric_spats(double n, double bar_n,
                                        double tol = 1e-12);

struct TheoremGridSpec {
  double extent = 6.0;
  Eigen::Index resolution = 201;
};

struct TheoremTolerances {
  double origin = 1e-9;
  double min = 1e-9;
  double q_identity = 1e-9;
  double step_tol = 1e-12;  // Fock-ladder integration
};

struct TheoremReport {
  std::string state_id;
  double n = 0.0;
  double gamma_t_c = 0.0;
  Eigen::Index cutoff = 0;
  double w_origin_at_threshold = 0.0;
  double min_w_at_threshold = 0.0;
  // Photon-loss channel only: max |W(q,p,ln 2) - c Q_0(sqrt2 q, sqrt2 p)|
  // with c = 2, and c as measured from the grid normalizations.
  std::optional<double> q_identity_residual;
  std::optional<double> q_identity_constant;
  bool passed = false;
};

/// Evolves a zero-vacuum Fock-diagonal state to ln((2+2n)/(1+2n)) through
/// the Fock ladder and checks that the Wigner function vanishes at the origin
/// and is non-negative on the grid; for n = 0 also checks the Husimi
/// smoothing identity. Throws DomainError if p_0 != 0.
TheoremReport verify_zero_vacuum_theorem(const FockDiagonalState& state,
                                         double n, std::string state_id,
                                         const TheoremGridSpec& grid = {},
                                         const TheoremTolerances& tols = {});

}  // namespace wigneg

#endif  // WIGNEG_THRESHOLD_HPP
