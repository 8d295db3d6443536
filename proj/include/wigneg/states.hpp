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

#ifndef WIGNEG_STATES_HPP
#define WIGNEG_STATES_HPP

#include <cstdint>

#include <Eigen/Dense>

namespace wigneg {

/// Thermal channel: bath mean photon number n and dimensionless decay time
/// gamma*t. n = 0 is the pure photon-loss channel.
struct ChannelParams {
  double n = 0.0;
  double gamma_t = 0.0;

  /// Throws DomainError unless both fields are finite and non-negative.
  void validate() const;
};

/// Density operator diagonal in the photon-number basis,
/// rho = sum_l p_l |l><l|, truncated at `cutoff()`.
///
/// Construction enforces p_l >= 0, cutoff >= 1 and
/// 1 - tail_tol <= sum p_l <= 1 (up to rounding).
class FockDiagonalState {
 public:
  static constexpr double kDefaultTailTol = 1e-12;

  explicit FockDiagonalState(Eigen::VectorXd weights,
                             double tail_tol = kDefaultTailTol);

  const Eigen::VectorXd& weights() const noexcept { return weights_; }
  Eigen::Index cutoff() const noexcept { return weights_.size() - 1; }
  double tail_tol() const noexcept { return tail_tol_; }
  double total() const { return weights_.sum(); }

  /// p_l, zero past the cutoff.
  double operator[](Eigen::Index l) const {
    return (l >= 0 && l < weights_.size()) ? weights_[l] : 0.0;
  }

 private:
  Eigen::VectorXd weights_;
  double tail_tol_;
};

/// Single Fock state |l><l| (cutoff max(l, 1)).
FockDiagonalState fock_state(int l);

inline FockDiagonalState vacuum_state() { return fock_state(0); }

/// Single photon-added thermal state a^dag rho_th a / Tr(.), seed mean photon
/// number bar_n: p_l = l x^(l-1) / (1 + bar_n)^2 with x = bar_n/(1 + bar_n).
/// The cutoff is the smallest L for which both the omitted probability and
/// the omitted first moment fall below tail_tol.
FockDiagonalState spats_weights(double bar_n,
                                double tail_tol = FockDiagonalState::kDefaultTailTol);

/// Bose-Einstein weights p_l = n^l / (1 + n)^(l+1), same cutoff rule.
FockDiagonalState thermal_weights(double n_mean,
                                  double tail_tol = FockDiagonalState::kDefaultTailTol);

double mean_photon(const FockDiagonalState& state);

inline double vacuum_population(const FockDiagonalState& state) {
  return state[0];
}

/// p_0 = 0 and p_1..p_cutoff proportional to squared standard-normal draws
/// from a 64-bit Mersenne twister seeded with `rng_seed`.
FockDiagonalState random_zero_vacuum_state(std::uint64_t rng_seed, int cutoff);

struct EvolveStats {
  long accepted_steps = 0;
  long rejected_steps = 0;
  long clamped_weights = 0;   // entries in [-1e-12, 0) reset to zero
  Eigen::Index cutoff = 0;    // cutoff of the returned state
  double mass_defect = 0.0;   // |sum p_l - 1| before any clamping
  double top_population = 0.0;
};

/// Integrates the diagonal of the thermal-channel master equation,
///
///   dp_l/d(gt) = (n+1)[(l+1) p_{l+1} - l p_l] + n[l p_{l-1} - (l+1) p_l],
///
/// from 0 to channel.gamma_t with a Dormand-Prince 5(4) pair. The ladder is
/// closed at the cutoff by dropping the upward rate out of the top level,
/// which conserves probability exactly. The cutoff starts at
/// max(L_in + ceil(5(n+1)), thermal cutoff of n) and grows until the top
/// population is below step_tol.
FockDiagonalState evolve_fock_diagonal(const FockDiagonalState& state,
                                       const ChannelParams& channel,
                                       double step_tol = 1e-12,
                                       EvolveStats* stats = nullptr);

}  // namespace wigneg

#endif  // WIGNEG_STATES_HPP
