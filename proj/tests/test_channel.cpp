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
#include <numbers>

#include "oracles.hpp"
#include "wigneg/channel.hpp"
#include "wigneg/errors.hpp"

using namespace wigneg;

TEST_CASE("convolution evolution") {
  const PhaseFunction spats1 = [](const PhasePointd& pt) { return spats_wigner_initial(pt, 1.0); };

  SUBCASE("matches the closed-form evolved SPATS") {
    ConvolutionSpec spec;
    spec.abs_tol = 1e-10;
    ConvolutionEstimate est;
    const double v = convolve_evolve(spats1, {0.5, 0.3}, {0.0, 0.0}, spec, &est);
    CHECK(std::abs(v - spats_wigner_evolved(PhasePointd{0, 0}, {0.5, 0.3}, 1.0)) < 1e-8);
    CHECK(est.error_estimate < 1e-10);
    CHECK(est.panels >= 2);
    for (const PhasePointd pt : {PhasePointd{0.4, -0.2}, PhasePointd{1.5, 0.7}, PhasePointd{-2.5, 3.0}}) {
      for (double n : {0.0, 0.5, 2.0}) {
        for (double gt : {0.1, 0.3, 0.9}) {
          CHECK(std::abs(convolve_evolve(spats1, {n, gt}, pt, spec) -
                         spats_wigner_evolved(pt, {n, gt}, 1.0)) < 1e-8);
        }
      }
    }
  }

  SUBCASE("thermal input relaxes to the bath mean") {
    for (double n0 : {0.0, 1.0, 4.0}) {
      const PhaseFunction th = [n0](const PhasePointd& pt) { return thermal_wigner(pt, n0); };
      for (double n : {0.0, 0.5, 2.0}) {
        for (double gt : {0.2, 1.0, 2.0}) {
          const double mean = oracle::thermal_mean_after(n0, n, gt);
          for (const PhasePointd pt : {PhasePointd{0, 0}, PhasePointd{0.8, 0.1}, PhasePointd{-1.2, 2.0}}) {
            const double v = convolve_evolve(th, {n, gt}, pt);
            CHECK(std::abs(v - thermal_wigner(pt, mean)) < 1e-8);
            CHECK(v >= 0.0);
          }
        }
      }
    }
  }

  SUBCASE("vanishing decay time reproduces the input") {
    const PhasePointd pt{0.3, 0.2};
    CHECK(std::abs(convolve_evolve(spats1, {0.5, 1e-8}, pt) - spats1(pt)) < 1e-6);
    CHECK(convolve_evolve(spats1, {0.5, 0.0}, pt) == spats1(pt));
  }

  SUBCASE("radially symmetric input gives radially symmetric output") {
    const PhaseFunction fock3 = [](const PhasePointd& pt) { return fock_wigner(pt, 3); };
    for (double r : {0.0, 0.6, 1.4, 2.3}) {
      const double a = convolve_evolve(fock3, {0.5, 0.4}, {r, 0.0});
      const double b = convolve_evolve(fock3, {0.5, 0.4}, {r * std::cos(1.1), r * std::sin(1.1)});
      CHECK(std::abs(a - b) < 1e-9);
    }
  }

  SUBCASE("configuration and convergence errors") {
    ConvolutionSpec low;
    low.quad_order = 4;
    CHECK_THROWS_AS(convolve_evolve(spats1, {0.5, 0.3}, {0, 0}, low), ConfigError);
    ConvolutionSpec single;
    single.max_panels = 1;
    CHECK_THROWS_AS(convolve_evolve(spats1, {0.5, 0.3}, {0, 0}, single), NumericalError);
    CHECK_THROWS_AS(convolve_evolve(spats1, {-0.5, 0.3}, {0, 0}), DomainError);
  }
}

TEST_CASE("Fokker-Planck evolution") {
  const GridExtents box = GridExtents::square(6.0);
  const WignerGrid spats = sample_grid(
      [](const PhasePointd& pt) { return spats_wigner_initial(pt, 1.0); }, box, 241, 241);

  SUBCASE("zero decay time returns the input") {
    const WignerGrid out = fokker_planck_evolve(spats, {0.5, 0.0});
    CHECK((out.values() == spats.values()).all());
  }

  SUBCASE("ADI matches the closed form") {
    FokkerPlanckStats stats;
    const WignerGrid out = fokker_planck_evolve(spats, {0.5, 0.3}, {}, &stats);
    const WignerGrid closed = sample_grid(
        [](const PhasePointd& pt) { return spats_wigner_evolved(pt, {0.5, 0.3}, 1.0); }, box, 241, 241);
    CHECK((out.values() - closed.values()).abs().maxCoeff() < 1e-3);
    CHECK(std::abs(stats.mass_drift()) < 1e-3);
    CHECK(stats.dt <= explicit_stability_limit(spats, 0.5) * (1 + 1e-12));
    CHECK(stats.steps * stats.dt == doctest::Approx(0.3));
  }

  SUBCASE("thermal relaxation in the loss channel") {
    const WignerGrid th = sample_grid(
        [](const PhasePointd& pt) { return thermal_wigner(pt, 1.0); }, box, 241, 241);
    FokkerPlanckStats stats;
    const WignerGrid out = fokker_planck_evolve(th, {0.0, 1.0}, {}, &stats);
    const double mean = std::exp(-1.0);
    const WignerGrid expected = sample_grid(
        [mean](const PhasePointd& pt) { return thermal_wigner(pt, mean); }, box, 241, 241);
    CHECK((out.values() - expected.values()).abs().maxCoeff() < 1e-3);
    CHECK(std::abs(stats.mass_drift()) < 1e-3);
  }

  SUBCASE("forward Euler agrees with ADI at the stability limit") {
    const WignerGrid coarse = sample_grid(
        [](const PhasePointd& pt) { return spats_wigner_initial(pt, 1.0); }, box, 121, 121);
    FokkerPlanckSpec euler{0.0, FokkerPlanckScheme::kForwardEuler};
    const WignerGrid a = fokker_planck_evolve(coarse, {0.5, 0.2}, euler);
    const WignerGrid b = fokker_planck_evolve(coarse, {0.5, 0.2});
    CHECK((a.values() - b.values()).abs().maxCoeff() < 2e-4);
  }

  SUBCASE("explicit step above the stability bound is refused") {
    FokkerPlanckSpec euler{2.0 * explicit_stability_limit(spats, 0.5), FokkerPlanckScheme::kForwardEuler};
    CHECK_THROWS_AS(fokker_planck_evolve(spats, {0.5, 0.3}, euler), ConfigError);
    // ADI has no such bound.
    FokkerPlanckSpec adi{0.02, FokkerPlanckScheme::kAdi};
    CHECK_NOTHROW(fokker_planck_evolve(spats, {0.5, 0.1}, adi));
  }

  SUBCASE("unnormalized input is refused") {
    WignerGrid doubled = spats;
    doubled.values() *= 2.0;
    CHECK_THROWS_AS(fokker_planck_evolve(doubled, {0.5, 0.3}), ConfigError);
  }

  SUBCASE("non-finite input is refused before stepping") {
    WignerGrid bad = spats;
    bad.values()(120, 120) = std::nan("");
    CHECK_THROWS_AS(fokker_planck_evolve(bad, {0.5, 0.3}), ConfigError);
  }
}
