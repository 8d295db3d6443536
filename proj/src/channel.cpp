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

#include "wigneg/channel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "wigneg/errors.hpp"
#include "wigneg/quadrature.hpp"

namespace wigneg {

namespace {

// Composite rule on [-radius, radius] with `panels` equal panels.
void composite_rule(const GaussLegendreRule& rule, int panels, double radius,
                    Eigen::ArrayXd& nodes, Eigen::ArrayXd& weights) {
  const int m = rule.order();
  nodes.resize(panels * m);
  weights.resize(panels * m);
  const double width = 2.0 * radius / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = -radius + (k + 0.5) * width;
    for (int i = 0; i < m; ++i) {
      nodes[k * m + i] = mid + 0.5 * width * rule.nodes[i];
      weights[k * m + i] = 0.5 * width * rule.weights[i];
    }
  }
}

// Second-order flux-form operator along one axis restricted to interior
// nodes: (A w)_i = lower_i w_{i-1} + diag_i w_i + upper_i w_{i+1}.
struct AxisOperator {
  Eigen::ArrayXd lower;
  Eigen::ArrayXd diag;
  Eigen::ArrayXd upper;
};

AxisOperator axis_operator(double origin, double step, Eigen::Index count,
                           double diffusion) {
  AxisOperator op{Eigen::ArrayXd::Zero(count), Eigen::ArrayXd::Zero(count),
                  Eigen::ArrayXd::Zero(count)};
  const double k = diffusion / step;
  for (Eigen::Index i = 1; i + 1 < count; ++i) {
    const double x = origin + double(i) * step;
    const double x_minus = x - 0.5 * step;
    const double x_plus = x + 0.5 * step;
    op.lower[i] = (-0.25 * x_minus + k) / step;
    op.diag[i] = (0.25 * (x_plus - x_minus) - 2.0 * k) / step;
    op.upper[i] = (0.25 * x_plus + k) / step;
  }
  return op;
}

// Thomas factorization of (I - h A) on the interior.
struct ImplicitSolver {
  Eigen::ArrayXd c_prime;
  Eigen::ArrayXd inv_denominator;
  Eigen::ArrayXd sub;

  ImplicitSolver(const AxisOperator& op, double h) {
    const Eigen::Index n = op.diag.size();
    c_prime = Eigen::ArrayXd::Zero(n);
    inv_denominator = Eigen::ArrayXd::Zero(n);
    sub = -h * op.lower;
    double prev_c = 0.0;
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
      const double a = i > 1 ? sub[i] : 0.0;
      const double b = 1.0 - h * op.diag[i];
      const double c = i + 2 < n ? -h * op.upper[i] : 0.0;
      const double denom = b - a * prev_c;
      inv_denominator[i] = 1.0 / denom;
      c_prime[i] = c * inv_denominator[i];
      prev_c = c_prime[i];
    }
  }

  // Solves in place along a strided line; edges stay zero.
  template <typename Line>
  void solve(Line&& x) const {
    const Eigen::Index n = c_prime.size();
    x[0] = 0.0;
    x[n - 1] = 0.0;
    double prev = 0.0;
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
      const double a = i > 1 ? sub[i] : 0.0;
      prev = (x[i] - a * prev) * inv_denominator[i];
      x[i] = prev;
    }
    for (Eigen::Index i = n - 3; i >= 1; --i) {
      x[i] -= c_prime[i] * x[i + 1];
    }
  }
};

// out = in + h * A_q in (A_q acts along rows index i, i.e. down columns).
void apply_q(const AxisOperator& op, double h, const Eigen::ArrayXXd& in,
             Eigen::ArrayXXd& out) {
  const Eigen::Index nq = in.rows();
  out = in;
  out.row(0).setZero();
  out.row(nq - 1).setZero();
  for (Eigen::Index i = 1; i + 1 < nq; ++i) {
    out.row(i) += h * (op.lower[i] * in.row(i - 1) + op.diag[i] * in.row(i) +
                       op.upper[i] * in.row(i + 1));
  }
}

void apply_p(const AxisOperator& op, double h, const Eigen::ArrayXXd& in,
             Eigen::ArrayXXd& out) {
  const Eigen::Index np = in.cols();
  out = in;
  out.col(0).setZero();
  out.col(np - 1).setZero();
  for (Eigen::Index j = 1; j + 1 < np; ++j) {
    out.col(j) += h * (op.lower[j] * in.col(j - 1) + op.diag[j] * in.col(j) +
                       op.upper[j] * in.col(j + 1));
  }
}

}  // namespace

double convolve_evolve(const PhaseFunction& initial,
                       const ChannelParams& channel, const PhasePointd& pt,
                       const ConvolutionSpec& spec,
                       ConvolutionEstimate* estimate) {
  channel.validate();
  if (spec.quad_order < 8) throw ConfigError("quad_order must be >= 8");
  if (!(spec.abs_tol > 0.0)) throw ConfigError("abs_tol must be > 0");
  if (channel.gamma_t == 0.0) {
    const double v = initial(pt);
    if (estimate) *estimate = ConvolutionEstimate{v, 0.0, 0, 1};
    return v;
  }

  const double n = channel.n;
  const double radius = spec.domain_radius > 0.0
                            ? spec.domain_radius
                            : 6.0 * std::sqrt((1.0 + 2.0 * n) / 4.0);
  const double shrink = std::sqrt(-std::expm1(-channel.gamma_t));
  const double inv_scale = std::exp(0.5 * channel.gamma_t);
  const double prefactor = std::exp(channel.gamma_t);
  const GaussLegendreRule rule = gauss_legendre(spec.quad_order);

  Eigen::ArrayXd nodes, weights;
  double previous = 0.0;
  long evaluations = 0;
  for (int panels = 1; panels <= spec.max_panels; panels *= 2) {
    composite_rule(rule, panels, radius, nodes, weights);
    // Kernel factor per axis separates: W_T(x, y) = g(x) g(y) with
    // g(x) = sqrt(2 / (pi (1 + 2n))) exp(-2 x^2 / (1 + 2n)).
    const double width = 1.0 + 2.0 * n;
    const Eigen::ArrayXd kernel =
        weights * std::sqrt(2.0 / (std::numbers::pi * width)) *
        (-2.0 * nodes.square() / width).exp();
    const Eigen::ArrayXd arg_q = (pt.q - shrink * nodes) * inv_scale;
    const Eigen::ArrayXd arg_p = (pt.p - shrink * nodes) * inv_scale;
    double sum = 0.0;
    for (Eigen::Index a = 0; a < nodes.size(); ++a) {
      double row = 0.0;
      for (Eigen::Index b = 0; b < nodes.size(); ++b) {
        row += kernel[b] * initial(PhasePointd{arg_q[a], arg_p[b]});
      }
      sum += kernel[a] * row;
    }
    evaluations += long(nodes.size() * nodes.size());
    const double current = prefactor * sum;
    if (panels > 1 && std::abs(current - previous) < spec.abs_tol) {
      if (estimate) {
        *estimate = ConvolutionEstimate{current, std::abs(current - previous),
                                        panels, evaluations};
      }
      return current;
    }
    previous = current;
  }
  throw NumericalError("convolution quadrature did not reach abs_tol", previous,
                       spec.abs_tol, spec.max_panels);
}

double explicit_stability_limit(const WignerGrid& grid, double n) {
  const double diffusion = (2.0 * n + 1.0) / 8.0;
  const double h = std::min(grid.dq(), grid.dp());
  return 0.25 * h * h / diffusion;
}

WignerGrid fokker_planck_evolve(const WignerGrid& initial,
                                const ChannelParams& channel,
                                const FokkerPlanckSpec& spec,
                                FokkerPlanckStats* stats) {
  channel.validate();
  const double limit = explicit_stability_limit(initial, channel.n);
  const double requested = spec.dt > 0.0 ? spec.dt : limit;
  if (spec.scheme == FokkerPlanckScheme::kForwardEuler && requested > limit) {
    throw ConfigError("explicit step " + std::to_string(requested) +
                      " exceeds stability limit " + std::to_string(limit));
  }
  const double mass0 = initial.trapezoid_integral();
  if (stats) {
    *stats = FokkerPlanckStats{};
    stats->initial_mass = mass0;
    stats->final_mass = mass0;
  }
  if (channel.gamma_t == 0.0) return initial;
  if (!initial.is_normalized()) {
    throw ConfigError("initial grid integrates to " + std::to_string(mass0) +
                      ", outside its normalization tolerance");
  }

  const long steps = long(std::ceil(channel.gamma_t / requested - 1e-9));
  const double dt = channel.gamma_t / double(steps);
  const double diffusion = (2.0 * channel.n + 1.0) / 8.0;
  const auto& ext = initial.extents();
  const AxisOperator op_q =
      axis_operator(ext.q_min, initial.dq(), initial.nq(), diffusion);
  const AxisOperator op_p =
      axis_operator(ext.p_min, initial.dp(), initial.np(), diffusion);

  WignerGrid result = initial;
  Eigen::ArrayXXd& w = result.values();
  w.row(0).setZero();
  w.row(w.rows() - 1).setZero();
  w.col(0).setZero();
  w.col(w.cols() - 1).setZero();
  Eigen::ArrayXXd scratch(w.rows(), w.cols());
  Eigen::ArrayXXd scratch2(w.rows(), w.cols());

  if (spec.scheme == FokkerPlanckScheme::kAdi) {
    const ImplicitSolver solve_q(op_q, 0.5 * dt);
    const ImplicitSolver solve_p(op_p, 0.5 * dt);
    for (long step = 0; step < steps; ++step) {
      apply_p(op_p, 0.5 * dt, w, scratch);
      for (Eigen::Index j = 0; j < scratch.cols(); ++j) solve_q.solve(scratch.col(j));
      apply_q(op_q, 0.5 * dt, scratch, w);
      for (Eigen::Index i = 0; i < w.rows(); ++i) solve_p.solve(w.row(i));
      if (!w.allFinite()) {
        throw NumericalError("non-finite value in Fokker-Planck ADI step", 0.0,
                             0.0, step);
      }
    }
  } else {
    for (long step = 0; step < steps; ++step) {
      apply_q(op_q, dt, w, scratch);
      apply_p(op_p, dt, w, scratch2);
      w = scratch + scratch2 - w;
      w.row(0).setZero();
      w.row(w.rows() - 1).setZero();
      w.col(0).setZero();
      w.col(w.cols() - 1).setZero();
      if (!w.allFinite()) {
        throw NumericalError("non-finite value in Fokker-Planck Euler step",
                             0.0, 0.0, step);
      }
    }
  }

  if (stats) {
    stats->steps = steps;
    stats->dt = dt;
    stats->final_mass = result.trapezoid_integral();
  }
  return result;
}

}  // namespace wigneg
