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

#ifndef WIGNEG_NEGATIVITY_HPP
#define WIGNEG_NEGATIVITY_HPP

#include <optional>

#include "wigneg/states.hpp"
#include "wigneg/wigner.hpp"

namespace wigneg {

enum class NegativityMethod { kAnalytic, kQuadrature };

/// Volume of the negative part of a Wigner function,
/// P_NW = |\iint_{W<0} W dq dp|.
struct NegativityResult {
  double volume = 0.0;
  // Radius of the negative disk, when the negative set is a disk about the
  // origin.
  std::optional<double> region_radius;
  NegativityMethod method = NegativityMethod::kAnalytic;
};

/// Radius of the disk on which the evolved SPATS Wigner function is
/// negative: r^2 = -kappa e^{-gt} / (8 (1 + bar_n)). Empty once kappa >= 0.
std::optional<double> negative_region_radius_spats(const ChannelParams& channel,
                                                   double bar_n);

/// Closed-form negativity volume of the evolved SPATS,
///
///   P_NW = -[kappa/(2 xi) + 2(1 + bar_n)(1 - e^{kappa/(4(1 + bar_n) xi)})]
///          e^{-gt} e^{zeta/xi} / xi,
///
/// and zero past the threshold decay time.
NegativityResult pnw_spats_analytic(const ChannelParams& channel, double bar_n);

struct PnwOptions {
  int max_refinements = 8;
  int max_cell_depth = 6;
  bool radial_fast_path = true;
};

/// Probes f at 8 radii against f(r, 0) at other angles; accepts when every
/// pair agrees within 1e-12.
bool is_radially_symmetric(const PhaseFunction& f, double extent);

/// Sign-masked quadrature over [-extent, extent]^2. Radially symmetric inputs
/// go through a 1-D path: sign changes of f(r, 0) on a uniform radial scan
/// are polished by bisection and 2 pi r f(r) is integrated adaptively over
/// each negative interval. Other inputs use cell-wise Gauss rules with
/// recursive splitting of cells that straddle the nodal curve. Either way the
/// scan resolution doubles until two successive volumes differ by less than
/// abs_tol; NumericalError carries the last two estimates otherwise.
NegativityResult pnw_numeric(const PhaseFunction& f, double extent,
                             int base_resolution = 64, double abs_tol = 1e-8,
                             const PnwOptions& options = {});

}  // namespace wigneg

#endif  // WIGNEG_NEGATIVITY_HPP
