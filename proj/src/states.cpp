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

#include "wigneg/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "wigneg/errors.hpp"

namespace wigneg {

namespace {

// Rounding slack on the normalization check.
constexpr double kSumSlack = 1e-10;
constexpr double kClampThreshold = 1e-12;
constexpr Eigen::Index kMaxCutoff = 200000;

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " +
                      std::to_string(value));
  }
}

void require_tail_tol(double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol <= 1e-6)) {
    throw DomainError("tail_tol must lie in (0, 1e-6], got " +
                      std::to_string(tail_tol));
  }
}

// Smallest L >= 1 with tail(L) < tol for both omitted mass and omitted first
// moment. Both callables take L and return the omitted quantity past L.
template <typename MassTail, typename MomentTail>
Eigen::Index smallest_cutoff(MassTail mass_tail, MomentTail moment_tail,
                             double tol) {
  for (Eigen::Index L = 1; L <= kMaxCutoff; ++L) {
    if (mass_tail(L) < tol && moment_tail(L) < tol) return L;
  }
  throw DomainError("photon-number cutoff exceeds " +
                    std::to_string(kMaxCutoff));
}

Eigen::Index thermal_cutoff(double n_mean, double tol) {
  const double x = n_mean / (1.0 + n_mean);
  if (x == 0.0) return 1;
  // Past L: mass x^(L+1); first moment x^m (m(1-x) + x) / (1-x), m = L+1.
  return smallest_cutoff(
      [x](Eigen::Index L) { return std::pow(x, double(L + 1)); },
      [x](Eigen::Index L) {
        const double m = double(L + 1);
        return std::pow(x, m) * (m * (1.0 - x) + x) / (1.0 - x);
      },
      tol);
}

Eigen::Index spats_cutoff(double bar_n, double tol) {
  const double x = bar_n / (1.0 + bar_n);
  if (x == 0.0) return 1;
  return smallest_cutoff(
      // sum_{l>L} l x^(l-1) (1-x)^2 = x^L (L + 1 - L x)
      [x](Eigen::Index L) {
        const double l = double(L);
        return std::pow(x, l) * (l + 1.0 - l * x);
      },
      // geometric bound with ratio ((m+1)/m)^2 x at m = L+1
      [x](Eigen::Index L) {
        const double m = double(L + 1);
        const double ratio = (m + 1.0) * (m + 1.0) / (m * m) * x;
        if (ratio >= 1.0) return 1.0;
        return m * m * std::pow(x, m - 1.0) * (1.0 - x) * (1.0 - x) /
               (1.0 - ratio);
      },
      tol);
}

// dp/d(gt) for the Fock ladder closed at p.size() - 1.
void ladder_rates(const Eigen::VectorXd& p, double n, Eigen::VectorXd& dp) {
  const Eigen::Index top = p.size() - 1;
  for (Eigen::Index l = 0; l <= top; ++l) {
    const double ld = double(l);
    const double from_above = l < top ? (ld + 1.0) * p[l + 1] : 0.0;
    const double from_below = l > 0 ? ld * p[l - 1] : 0.0;
    const double up_out = l < top ? (ld + 1.0) * p[l] : 0.0;
    dp[l] = (n + 1.0) * (from_above - ld * p[l]) + n * (from_below - up_out);
  }
}

struct Dopri5Result {
  Eigen::VectorXd p;
  long accepted = 0;
  long rejected = 0;
};

Dopri5Result integrate_ladder(Eigen::VectorXd p, double n, double gamma_t,
                              double tol) {
  // Dormand-Prince 5(4) tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  (void)c2, (void)c3, (void)c4, (void)c5;
  constexpr long kMaxSteps = 5'000'000;

  const Eigen::Index dim = p.size();
  Eigen::VectorXd k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim),
      k7(dim), y(dim), err(dim);

  Dopri5Result out;
  const double rate_scale = (2.0 * n + 1.0) * double(dim);
  double h = std::min(gamma_t, 0.5 / rate_scale);
  double t = 0.0;
  ladder_rates(p, n, k1);

  while (t < gamma_t) {
    if (out.accepted + out.rejected > kMaxSteps) {
      throw NumericalError("Fock ladder integration exceeded step budget at gt=" +
                               std::to_string(t),
                           t, h, out.accepted);
    }
    bool last = false;
    if (t + h >= gamma_t) {
      h = gamma_t - t;
      last = true;
    }
    y = p + h * a21 * k1;
    ladder_rates(y, n, k2);
    y = p + h * (a31 * k1 + a32 * k2);
    ladder_rates(y, n, k3);
    y = p + h * (a41 * k1 + a42 * k2 + a43 * k3);
    ladder_rates(y, n, k4);
    y = p + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    ladder_rates(y, n, k5);
    y = p + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    ladder_rates(y, n, k6);
    y = p + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    ladder_rates(y, n, k7);
    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const Eigen::ArrayXd scale =
        tol + tol * p.array().abs().max(y.array().abs());
    const double norm = (err.array().abs() / scale).maxCoeff();
    if (!std::isfinite(norm)) {
      throw NumericalError("non-finite error estimate in Fock ladder", t, h,
                           out.accepted);
    }
    if (norm <= 1.0) {
      t = last ? gamma_t : t + h;
      p = y;
      k1 = k7;  // first-same-as-last
      ++out.accepted;
    } else {
      ++out.rejected;
    }
    const double factor =
        norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < 1e-14 * std::max(1.0, gamma_t) && t < gamma_t) {
      throw NumericalError("step size underflow in Fock ladder", t, h,
                           out.accepted);
    }
  }
  out.p = std::move(p);
  return out;
}

}  // namespace

void ChannelParams::validate() const {
  require_non_negative(n, "channel n");
  require_non_negative(gamma_t, "gamma_t");
}

FockDiagonalState::FockDiagonalState(Eigen::VectorXd weights, double tail_tol)
    : weights_(std::move(weights)), tail_tol_(tail_tol) {
  if (weights_.size() < 2) {
    throw DomainError("Fock-diagonal state needs cutoff >= 1");
  }
  if (!(tail_tol_ >= 0.0 && tail_tol_ < 1.0)) {
    throw DomainError("tail_tol must lie in [0, 1)");
  }
  for (Eigen::Index l = 0; l < weights_.size(); ++l) {
    if (!(weights_[l] >= 0.0) || !std::isfinite(weights_[l])) {
      throw DomainError("negative or non-finite weight at l=" +
                        std::to_string(l));
    }
  }
  const double sum = weights_.sum();
  if (sum < 1.0 - tail_tol_ - kSumSlack || sum > 1.0 + kSumSlack) {
    throw DomainError("weights sum to " + std::to_string(sum) +
                      ", outside [1 - tail_tol, 1]");
  }
}

FockDiagonalState fock_state(int l) {
  if (l < 0) throw DomainError("Fock index must be >= 0");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(std::max(l, 1) + 1);
  w[l] = 1.0;
  return FockDiagonalState(std::move(w), 0.0);
}

FockDiagonalState spats_weights(double bar_n, double tail_tol) {
  require_non_negative(bar_n, "bar_n");
  require_tail_tol(tail_tol);
  const Eigen::Index L = spats_cutoff(bar_n, tail_tol);
  const double x = bar_n / (1.0 + bar_n);
  const double norm = 1.0 / ((1.0 + bar_n) * (1.0 + bar_n));
  Eigen::VectorXd w(L + 1);
  w[0] = 0.0;
  double power = 1.0;  // x^(l-1)
  for (Eigen::Index l = 1; l <= L; ++l) {
    w[l] = double(l) * power * norm;
    power *= x;
  }
  return FockDiagonalState(std::move(w), tail_tol);
}

FockDiagonalState thermal_weights(double n_mean, double tail_tol) {
  require_non_negative(n_mean, "n_mean");
  require_tail_tol(tail_tol);
  const Eigen::Index L = thermal_cutoff(n_mean, tail_tol);
  const double x = n_mean / (1.0 + n_mean);
  Eigen::VectorXd w(L + 1);
  double power = 1.0 / (1.0 + n_mean);
  for (Eigen::Index l = 0; l <= L; ++l) {
    w[l] = power;
    power *= x;
  }
  return FockDiagonalState(std::move(w), tail_tol);
}

double mean_photon(const FockDiagonalState& state) {
  const auto& w = state.weights();
  return (Eigen::VectorXd::LinSpaced(w.size(), 0.0, double(w.size() - 1))
              .array() *
          w.array())
      .sum();
}

FockDiagonalState random_zero_vacuum_state(std::uint64_t rng_seed, int cutoff) {
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
  std::mt19937_64 engine(rng_seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(cutoff + 1);
  for (int l = 1; l <= cutoff; ++l) {
    const double z = normal(engine);
    w[l] = z * z;
  }
  w /= w.sum();
  return FockDiagonalState(std::move(w), 0.0);
}

FockDiagonalState evolve_fock_diagonal(const FockDiagonalState& state,
                                       const ChannelParams& channel,
                                       double step_tol, EvolveStats* stats) {
  channel.validate();
  if (!(step_tol > 0.0 && step_tol <= 1e-3)) {
    throw DomainError("step_tol must lie in (0, 1e-3]");
  }
  if (channel.gamma_t == 0.0) {
    if (stats) {
      *stats = EvolveStats{};
      stats->cutoff = state.cutoff();
    }
    return state;
  }

  const double n = channel.n;
  const Eigen::Index margin = Eigen::Index(std::ceil(5.0 * (n + 1.0)));
  Eigen::Index L = state.cutoff() + margin;
  if (n > 0.0) L = std::max(L, thermal_cutoff(n, step_tol));

  constexpr int kMaxGrowth = 12;
  for (int attempt = 0; attempt <= kMaxGrowth; ++attempt) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(L + 1);
    p.head(state.weights().size()) = state.weights();
    Dopri5Result run = integrate_ladder(std::move(p), n, channel.gamma_t,
                                        step_tol);
    const double top = std::abs(run.p[L]);
    if (n > 0.0 && top >= step_tol && attempt < kMaxGrowth) {
      L += std::max(margin, L / 2);
      continue;
    }
    if (top >= step_tol && n > 0.0) {
      throw NumericalError("Fock cutoff growth did not converge", top,
                           step_tol, attempt);
    }

    const double mass_defect = std::abs(run.p.sum() - state.total());
    long clamped = 0;
    for (Eigen::Index l = 0; l <= L; ++l) {
      if (run.p[l] < 0.0) {
        if (run.p[l] < -kClampThreshold) {
          throw NumericalError("evolved weight below clamp threshold at l=" +
                                   std::to_string(l),
                               run.p[l], kClampThreshold, run.accepted);
        }
        run.p[l] = 0.0;
        ++clamped;
      }
    }
    if (stats) {
      stats->accepted_steps = run.accepted;
      stats->rejected_steps = run.rejected;
      stats->clamped_weights = clamped;
      stats->cutoff = L;
      stats->mass_defect = mass_defect;
      stats->top_population = top;
    }
    return FockDiagonalState(std::move(run.p),
                             std::min(state.tail_tol() + step_tol, 0.5));
  }
  throw NumericalError("unreachable");
}

}  // namespace wigneg
