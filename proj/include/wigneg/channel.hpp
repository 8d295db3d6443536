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

#ifndef WIGNEG_CHANNEL_HPP
#define WIGNEG_CHANNEL_HPP

#include "wigneg/grid.hpp"
#include "wigneg/states.hpp"
#include "wigneg/wigner.hpp"

namespace wigneg {

/// Tensor Gauss-Legendre quadrature of the thermal-kernel convolution.
/// Panels per axis double from 1 up to max_panels until two successive
/// estimates differ by less than abs_tol.
struct ConvolutionSpec {
  int quad_order = 16;
  double domain_radius = 0.0;  // <= 0 selects 6 sqrt((1 + 2n) / 4)
  double abs_tol = 1e-10;
  int max_panels = 64;
};

struct ConvolutionEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
  long evaluations = 0;
};

/// Evolves an arbitrary initial Wigner function to decay time gamma_t:
///
///   W(q,p) = e^{gt} \iint W_T(x,y) W_0((q - s x)/c, (p - s y)/c) dx dy,
///
/// s = sqrt(1 - e^{-gt}), c = e^{-gt/2}, W_T the thermal Wigner function of
/// the bath. gamma_t = 0 returns initial(pt).
double convolve_evolve(const PhaseFunction& initial,
                       const ChannelParams& channel, const PhasePointd& pt,
                       const ConvolutionSpec& spec = {},
                       ConvolutionEstimate* estimate = nullptr);

enum class FokkerPlanckScheme { kForwardEuler, kAdi };

struct FokkerPlanckSpec {
  double dt = 0.0;  // <= 0 selects the explicit stability bound
  FokkerPlanckScheme scheme = FokkerPlanckScheme::kAdi;
};

struct FokkerPlanckStats {
  long steps = 0;
  double dt = 0.0;
  double initial_mass = 0.0;
  double final_mass = 0.0;
  double mass_drift() const { return final_mass - initial_mass; }
};

/// Largest explicit step: 0.25 min(dq, dp)^2 / D with D = (2n + 1) / 8.
double explicit_stability_limit(const WignerGrid& grid, double n);

/// Integrates
///
///   dW/d(gt) = (1/2)(d_q q + d_p p) W + ((2n + 1)/8)(d_qq + d_pp) W
///
/// on the grid of `initial` with a conservative flux-form centred stencil
/// and zero Dirichlet edges. kAdi is Peaceman-Rachford (both half steps
/// implicit in one direction, explicit in the other); kForwardEuler is kept
/// for cross-checks and refuses steps above the stability limit.
WignerGrid fokker_planck_evolve(const WignerGrid& initial,
                                const ChannelParams& channel,
                                const FokkerPlanckSpec& spec = {},
                                FokkerPlanckStats* stats = nullptr);

}  // namespace wigneg

#endif  // WIGNEG_CHANNEL_HPP
