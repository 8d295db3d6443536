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

#include "wigneg/negativity.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wigneg/errors.hpp"
#include "wigneg/quadrature.hpp"
#include "wigneg/threshold.hpp"

namespace wigneg {

namespace {

constexpr double kSymmetryTol = 1e-12;

struct RadialScan {
  double volume = 0.0;
  std::optional<double> region_radius;
};

RadialScan radial_negative_volume(const PhaseFunction& f, double extent,
                                  int resolution, double abs_tol) {
  auto radial = [&f](double r) { return f(PhasePointd{r, 0.0}); };
  const double step = extent / resolution;
  const double root_tol = 1e-15 * extent;

  struct Interval {
    double lo, hi;
  };
  std::vector<Interval> intervals;
  bool inside = false;
  double start = 0.0;
  double prev_r = 0.0;
  for (int k = 0; k <= resolution; ++k) {
    const double r = k * step;
    const bool negative = radial(r) < 0.0;
    if (negative && !inside) {
      start = k == 0 ? 0.0 : bisect_root(radial, prev_r, r, root_tol);
      inside = true;
    } else if (!negative && inside) {
      intervals.push_back({start, bisect_root(radial, prev_r, r, root_tol)});
      inside = false;
    }
    prev_r = r;
  }
  if (inside) intervals.push_back({start, extent});

  RadialScan scan;
  const double local_tol = 0.1 * abs_tol / double(std::max<size_t>(intervals.size(), 1));
  double signed_sum = 0.0;
  for (const auto& iv : intervals) {
    signed_sum += integrate_adaptive(
        [&radial](double r) { return 2.0 * std::numbers::pi * r * radial(r); },
        iv.lo, iv.hi, local_tol);
  }
  scan.volume = std::abs(signed_sum);
  if (intervals.size() == 1 && intervals.front().lo == 0.0) {
    scan.region_radius = intervals.front().hi;
  }
  return scan;
}

// 3x3 Gauss-Legendre on a cell, integrand min(f, 0).
double gauss3_negative(const PhaseFunction& f, double q0, double q1, double p0,
                       double p1) {
  static constexpr std::array<double, 3> x = {-0.7745966692414834, 0.0,
                                              0.7745966692414834};
  static constexpr std::array<double, 3> w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  const double qm = 0.5 * (q0 + q1), qh = 0.5 * (q1 - q0);
  const double pm = 0.5 * (p0 + p1), ph = 0.5 * (p1 - p0);
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const double v = f(PhasePointd{qm + qh * x[a], pm + ph * x[b]});
      if (v < 0.0) sum += w[a] * w[b] * v;
    }
  }
  return qh * ph * sum;
}

double cell_negative(const PhaseFunction& f, double q0, double q1, double p0,
                     double p1, int depth) {
  const double qm = 0.5 * (q0 + q1), pm = 0.5 * (p0 + p1);
  const std::array<double, 5> samples = {
      f(PhasePointd{qm, pm}), f(PhasePointd{q0, p0}), f(PhasePointd{q1, p0}),
      f(PhasePointd{q0, p1}), f(PhasePointd{q1, p1})};
  int negatives = 0;
  for (double s : samples) negatives += s < 0.0 ? 1 : 0;
  if (negatives == 0) return 0.0;
  if (negatives == 5 || depth <= 0) return gauss3_negative(f, q0, q1, p0, p1);
  return cell_negative(f, q0, qm, p0, pm, depth - 1) +
         cell_negative(f, qm, q1, p0, pm, depth - 1) +
         cell_negative(f, q0, qm, pm, p1, depth - 1) +
         cell_negative(f, qm, q1, pm, p1, depth - 1);
}

double cellwise_negative_volume(const PhaseFunction& f, double extent,
                                int resolution, int max_depth) {
  const double h = 2.0 * extent / resolution;
  double sum = 0.0;
  for (int i = 0; i < resolution; ++i) {
    const double q0 = -extent + i * h;
    for (int j = 0; j < resolution; ++j) {
      const double p0 = -extent + j * h;
      sum += cell_negative(f, q0, q0 + h, p0, p0 + h, max_depth);
    }
  }
  return std::abs(sum);
}

}  // namespace

std::optional<double> negative_region_radius_spats(const ChannelParams& channel,
                                                   double bar_n) {
  channel.validate();
  const auto c = evolved_coefficients(channel, bar_n);
  if (c.kappa >= 0.0) return std::nullopt;
  return std::sqrt(-c.kappa * std::exp(-channel.gamma_t) /
                   (8.0 * (1.0 + bar_n)));
}

NegativityResult pnw_spats_analytic(const ChannelParams& channel,
                                    double bar_n) {
  channel.validate();
  NegativityResult result;
  result.method = NegativityMethod::kAnalytic;
  const auto c = evolved_coefficients(channel, bar_n);
  if (channel.gamma_t > threshold_spats(channel.n) || c.kappa >= 0.0) {
    return result;
  }
  const double exponent = c.kappa / (4.0 * (1.0 + bar_n) * c.xi);
  // 1 - e^{x} written as -expm1(x) so the bracket keeps its digits near the
  // threshold, where it vanishes quadratically.
  const double bracket =
      c.kappa / (2.0 * c.xi) + 2.0 * (1.0 + bar_n) * (-std::expm1(exponent));
  result.volume = -bracket * std::exp(-channel.gamma_t) *
                  std::exp(c.zeta / c.xi) / c.xi;
  result.region_radius = negative_region_radius_spats(channel, bar_n);
  return result;
}

bool is_radially_symmetric(const PhaseFunction& f, double extent) {
  for (int k = 0; k < 8; ++k) {
    const double r = extent * (k + 1) / 16.0;
    const double theta = 0.37 + 0.71 * k;
    const double on_axis = f(PhasePointd{r, 0.0});
    const double rotated =
        f(PhasePointd{r * std::cos(theta), r * std::sin(theta)});
    if (!(std::abs(on_axis - rotated) <= kSymmetryTol)) return false;
  }
  return true;
}

NegativityResult pnw_numeric(const PhaseFunction& f, double extent,
                             int base_resolution, double abs_tol,
                             const PnwOptions& options) {
  if (!(extent > 0.0) || base_resolution < 2 || !(abs_tol > 0.0)) {
    throw ConfigError("pnw_numeric needs extent > 0, resolution >= 2, abs_tol > 0");
  }
  NegativityResult result;
  result.method = NegativityMethod::kQuadrature;
  const bool radial = options.radial_fast_path && is_radially_symmetric(f, extent);

  double previous = 0.0;
  double before_previous = 0.0;
  int resolution = base_resolution;
  for (int level = 0; level <= options.max_refinements; ++level, resolution *= 2) {
    double current = 0.0;
    std::optional<double> radius;
    if (radial) {
      const RadialScan scan = radial_negative_volume(f, extent, resolution, abs_tol);
      current = scan.volume;
      radius = scan.region_radius;
    } else {
      current = cellwise_negative_volume(f, extent, resolution,
                                         options.max_cell_depth);
    }
    if (level > 0 && std::abs(current - previous) < abs_tol) {
      result.volume = current;
      result.region_radius = radius;
      return result;
    }
    before_previous = previous;
    previous = current;
  }
  throw NumericalError("negativity quadrature did not settle: last estimates " +
                           std::to_string(before_previous) + ", " +
                           std::to_string(previous),
                       previous, std::abs(previous - before_previous),
                       options.max_refinements);
}

}  // namespace wigneg
