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

#ifndef WIGNEG_WIGNER_HPP
#define WIGNEG_WIGNER_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <type_traits>

#include "wigneg/laguerre.hpp"
#include "wigneg/states.hpp"

namespace wigneg {

/// beta = q + i p.
template <typename Scalar>
struct PhasePoint {
  Scalar q{};
  Scalar p{};

  constexpr Scalar radius_squared() const { return q * q + p * p; }
};

using PhasePointd = PhasePoint<double>;

/// Anything that maps a phase-space point to a quasiprobability value.
using PhaseFunction = std::function<double(const PhasePointd&)>;

template <typename Scalar>
using Arg = std::type_identity_t<Scalar>;

template <typename Scalar>
constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

/// Thermal state with mean photon number n_mean (n_mean >= 0):
/// 2 / (pi (1 + 2n)) exp(-2 r^2 / (1 + 2n)).
template <typename Scalar>
Scalar thermal_wigner(const PhasePoint<Scalar>& pt, Arg<Scalar> n_mean) {
  using std::exp;
  const Scalar width = Scalar(1) + Scalar(2) * n_mean;
  return Scalar(2) / (kPi<Scalar> * width) *
         exp(-Scalar(2) * pt.radius_squared() / width);
}

/// Single photon-added thermal state before any channel, seed bar_n >= 0.
template <typename Scalar>
Scalar spats_wigner_initial(const PhasePoint<Scalar>& pt, Arg<Scalar> bar_n) {
  using std::exp;
  const Scalar r2 = pt.radius_squared();
  const Scalar w = Scalar(1) + Scalar(2) * bar_n;
  return Scalar(2) / kPi<Scalar> *
         (Scalar(4) * (Scalar(1) + bar_n) * r2 / (w * w * w) -
          Scalar(1) / (w * w)) *
         exp(-Scalar(2) * r2 / w);
}

/// Coefficients of the evolved SPATS Wigner function.
template <typename Scalar>
struct EvolvedSpatsCoefficients {
  Scalar xi;
  Scalar zeta;
  Scalar kappa;
};

template <typename Scalar>
EvolvedSpatsCoefficients<Scalar> evolved_coefficients(Scalar n, Arg<Scalar> gamma_t,
                                                      Arg<Scalar> bar_n) {
  using std::exp;
  const Scalar e = exp(gamma_t);
  const Scalar a = Scalar(1) + Scalar(2) * n;
  const Scalar d = bar_n - n;
  EvolvedSpatsCoefficients<Scalar> c;
  c.xi = Scalar(2) * d + a * e;
  c.zeta = Scalar(2) * d * gamma_t + a * gamma_t * e;
  c.kappa = -Scalar(8) * d * (Scalar(1) + n) + Scalar(2) * a * a * e * e +
            Scalar(4) * (bar_n * a - a * a) * e;
  return c;
}

inline EvolvedSpatsCoefficients<double> evolved_coefficients(
    const ChannelParams& channel, double bar_n) {
  return evolved_coefficients<double>(channel.n, channel.gamma_t, bar_n);
}

/// SPATS with seed bar_n after decay time gamma_t in a channel with bath
/// photon number n:
///
///   W = [kappa + 8 (1 + bar_n) e^{gt} r^2] / (pi xi^3)
///       * exp((zeta - 2 e^{gt} r^2) / xi).
template <typename Scalar>
Scalar spats_wigner_evolved(const PhasePoint<Scalar>& pt, Arg<Scalar> n,
                            Arg<Scalar> gamma_t, Arg<Scalar> bar_n) {
  using std::exp;
  const auto c = evolved_coefficients<Scalar>(n, gamma_t, bar_n);
  const Scalar e = exp(gamma_t);
  const Scalar r2 = pt.radius_squared();
  return (c.kappa + Scalar(8) * (Scalar(1) + bar_n) * e * r2) /
         (kPi<Scalar> * c.xi * c.xi * c.xi) *
         exp((c.zeta - Scalar(2) * e * r2) / c.xi);
}

inline double spats_wigner_evolved(const PhasePointd& pt,
                                   const ChannelParams& channel,
                                   double bar_n) {
  return spats_wigner_evolved<double>(pt, channel.n, channel.gamma_t, bar_n);
}

/// Fock state |l>: (2/pi) (-1)^l L_l(4 r^2) e^{-2 r^2}. Throws DomainError
/// past kMaxLaguerreIndex.
template <typename Scalar>
Scalar fock_wigner(const PhasePoint<Scalar>& pt, int l) {
  const Scalar value =
      Scalar(2) / kPi<Scalar> *
      scaled_laguerre<Scalar>(l, Scalar(4) * pt.radius_squared());
  return (l % 2 == 0) ? value : -value;
}

/// sum_l p_l W_l, one recurrence pass over the cutoff.
double fock_diagonal_wigner(const PhasePointd& pt,
                            const FockDiagonalState& state);

/// Husimi function <alpha|rho|alpha>/pi at alpha = q + i p:
/// (1/pi) sum_l p_l e^{-r^2} r^{2l} / l!. Non-negative by construction.
double q_function(const PhasePointd& pt, const FockDiagonalState& state);

}  // namespace wigneg

#endif  // WIGNEG_WIGNER_HPP
