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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wigneg/errors.hpp"
#include "wigneg/states.hpp"

using namespace wigneg;

TEST_CASE("spats weights follow the photon-added thermal distribution") {
  SUBCASE("bar_n = 0 is the single-photon Fock state") {
    const auto s = spats_weights(0.0);
    CHECK(s[1] == 1.0);
    CHECK(s[0] == 0.0);
    for (Eigen::Index l = 2; l <= s.cutoff(); ++l) CHECK(s[l] == 0.0);
  }
  SUBCASE("bar_n = 1 first weights") {
    const auto s = spats_weights(1.0);
    // l (1/2)^l / 2
    for (int l = 1; l <= 6; ++l) {
      CHECK(s[l] == doctest::Approx(l * std::pow(0.5, l) / 2.0).epsilon(1e-15));
    }
    CHECK(s[1] == doctest::Approx(0.25));
    CHECK(s[2] == doctest::Approx(0.25));
    CHECK(s[3] == doctest::Approx(3.0 / 16.0));
    CHECK(std::abs(s.total() - 1.0) < 1e-12);
  }
  SUBCASE("omitted tail is below tail_tol") {
    for (double bar_n : {0.1, 1.0, 5.0, 40.0}) {
      const auto s = spats_weights(bar_n, 1e-10);
      CHECK(1.0 - s.total() < 1e-10);
      CHECK(1.0 - s.total() >= -1e-15);
    }
  }
  CHECK_THROWS_AS(spats_weights(-0.1), DomainError);
  CHECK_THROWS_AS(spats_weights(1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(spats_weights(1.0, 0.0), DomainError);
}

TEST_CASE("thermal weights are geometric") {
  CHECK(thermal_weights(0.0)[0] == 1.0);
  const auto t = thermal_weights(1.0);
  CHECK(t[0] == doctest::Approx(0.5));
  CHECK(t[1] == doctest::Approx(0.25));
  CHECK(t[2] == doctest::Approx(0.125));
  for (double n_mean : {0.0, 0.3, 1.0, 5.0, 20.0}) {
    CHECK(std::abs(mean_photon(thermal_weights(n_mean)) - n_mean) < 1e-10);
  }
  CHECK_THROWS_AS(thermal_weights(-1.0), DomainError);
}

TEST_CASE("scalar observables") {
  CHECK(mean_photon(vacuum_state()) == 0.0);
  CHECK(vacuum_population(vacuum_state()) == 1.0);
  CHECK(vacuum_population(thermal_weights(1.0)) == doctest::Approx(0.5));
  // sum l^2 x^(l-1) (1-x)^2 = (1+x)/(1-x) = 1 + 2 bar_n
  for (double bar_n : {0.0, 3.0 / 7.0, 1.0, 5.0}) {
    const auto s = spats_weights(bar_n);
    CHECK(std::abs(mean_photon(s) - (2.0 * bar_n + 1.0)) < 1e-10);
    CHECK(vacuum_population(s) == 0.0);
  }
  CHECK(mean_photon(thermal_weights(1.0)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("state construction enforces invariants") {
  CHECK_THROWS_AS(FockDiagonalState(Eigen::VectorXd::Ones(1)), DomainError);
  Eigen::VectorXd negative(3);
  negative << 0.5, 0.6, -0.1;
  CHECK_THROWS_AS(FockDiagonalState{negative}, DomainError);
  Eigen::VectorXd short_mass(3);
  short_mass << 0.5, 0.2, 0.2;
  CHECK_THROWS_AS(FockDiagonalState{short_mass}, DomainError);
  CHECK_NOTHROW(FockDiagonalState(short_mass, 0.2));
  CHECK_THROWS_AS(fock_state(-1), DomainError);
  CHECK(fock_state(0).cutoff() == 1);
  CHECK(fock_state(4)[4] == 1.0);
}

TEST_CASE("random zero-vacuum states") {
  for (std::uint64_t seed : {1u, 7u, 42u, 1234u}) {
    const auto s = random_zero_vacuum_state(seed, 12);
    CHECK(s.cutoff() == 12);
    CHECK(vacuum_population(s) == 0.0);
    CHECK(std::abs(s.total() - 1.0) < 1e-12);
    CHECK((s.weights().tail(12).array() > 0.0).all());
    CHECK(random_zero_vacuum_state(seed, 12).weights() == s.weights());
  }
  CHECK(random_zero_vacuum_state(1, 12).weights() !=
        random_zero_vacuum_state(2, 12).weights());
  CHECK_THROWS_AS(random_zero_vacuum_state(1, 0), DomainError);
}

TEST_CASE("Fock ladder evolution") {
  SUBCASE("zero decay time is the identity") {
    const auto s = spats_weights(1.0);
    const auto e = evolve_fock_diagonal(s, {0.5, 0.0});
    CHECK(e.weights() == s.weights());
  }

  SUBCASE("thermal input stays thermal with the relaxed mean") {
    for (double n0 : {0.0, 1.0, 3.0}) {
      for (double n : {0.0, 0.5, 2.0}) {
        for (double gt : {0.1, 0.7, 2.0}) {
          EvolveStats stats;
          const auto e = evolve_fock_diagonal(thermal_weights(n0), {n, gt}, 1e-12, &stats);
          const double expected = oracle::thermal_mean_after(n0, n, gt);
          CHECK(std::abs(mean_photon(e) - expected) < 1e-6);
          double worst = 0.0;
          for (int l = 0; l <= 30; ++l) {
            worst = std::max(worst, std::abs(e[l] - oracle::thermal_weight(expected, l)));
          }
          CHECK(worst < 1e-9);
          CHECK(stats.mass_defect < 1e-9);
          CHECK(stats.accepted_steps > 0);
        }
      }
    }
  }

  SUBCASE("long times relax to the bath") {
    for (double n : {0.0, 0.5, 1.0}) {
      const auto e = evolve_fock_diagonal(spats_weights(1.0), {n, 20.0});
      const auto bath = thermal_weights(n);
      double worst = 0.0;
      for (Eigen::Index l = 0; l <= std::max(e.cutoff(), bath.cutoff()); ++l) {
        worst = std::max(worst, std::abs(e[l] - bath[l]));
      }
      CHECK(worst < 1e-6);
    }
  }

  SUBCASE("probability and positivity are preserved") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto s = random_zero_vacuum_state(seed, 12);
      for (double n : {0.0, 0.5, 1.0}) {
        const auto e = evolve_fock_diagonal(s, {n, 0.4});
        CHECK(std::abs(e.total() - 1.0) < 1e-9);
        CHECK((e.weights().array() >= 0.0).all());
      }
    }
  }

  SUBCASE("semigroup: a then b equals a + b") {
    for (std::uint64_t seed = 3; seed <= 8; ++seed) {
      const auto s = random_zero_vacuum_state(seed, 10);
      const double n = 0.25 * double(seed % 4);
      const auto two_legs =
          evolve_fock_diagonal(evolve_fock_diagonal(s, {n, 0.15}), {n, 0.35});
      const auto one_leg = evolve_fock_diagonal(s, {n, 0.5});
      double worst = 0.0;
      for (Eigen::Index l = 0; l <= std::max(two_legs.cutoff(), one_leg.cutoff()); ++l) {
        worst = std::max(worst, std::abs(two_legs[l] - one_leg[l]));
      }
      CHECK(worst < 1e-8);
    }
  }

  SUBCASE("loss channel only moves population down") {
    const auto e = evolve_fock_diagonal(fock_state(1), {0.0, std::log(2.0)});
    CHECK(e[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(e[1] == doctest::Approx(0.5).epsilon(1e-10));
  }

  CHECK_THROWS_AS(evolve_fock_diagonal(vacuum_state(), {-1.0, 0.1}), DomainError);
  CHECK_THROWS_AS(evolve_fock_diagonal(vacuum_state(), {0.0, 0.1}, 0.0), DomainError);
}
