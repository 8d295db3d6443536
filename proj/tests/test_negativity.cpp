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
#include "wigneg/grid.hpp"
#include "wigneg/negativity.hpp"
#include "wigneg/threshold.hpp"

using namespace wigneg;

namespace {

// mpmath, 30 digits: (1/2) \int_{2-sqrt2}^{2+sqrt2} |L_2(x)| e^{-x/2} dx.
constexpr double kFockTwoVolume = 0.364494628893567036895;
// 2 e^{-1/2} - 1
constexpr double kSinglePhotonVolume = 0.213061319425266847208;
// bar_n = 1, n = 0.5, gt = 0 (xi = 3, kappa = -6)
constexpr double kSpatsOneVolume = 0.0384010440952064909936;

PhaseFunction evolved(double bar_n, ChannelParams channel) {
  return [bar_n, channel](const PhasePointd& pt) {
    return spats_wigner_evolved(pt, channel, bar_n);
  };
}

}  // namespace

TEST_CASE("negative disk radius of the evolved SPATS") {
  CHECK(*negative_region_radius_spats({0.0, 0.0}, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  for (double n : {0.0, 0.5, 1.0}) {
    CHECK_FALSE(negative_region_radius_spats({n, threshold_spats(n) + 1e-12}, 1.0).has_value());
  }
  const double r = *negative_region_radius_spats({0.5, 0.0}, 1.0);
  CHECK(r * r == doctest::Approx(6.0 / 16.0).epsilon(1e-15));
  // Sign change of the Wigner function along the q axis.
  const auto w = evolved(1.0, {0.5, 0.0});
  CHECK(w(PhasePointd{r - 1e-6, 0.0}) < 0.0);
  CHECK(w(PhasePointd{r + 1e-6, 0.0}) > 0.0);
  const auto w2 = evolved(3.0 / 7.0, {0.5, 0.2});
  const double r2 = *negative_region_radius_spats({0.5, 0.2}, 3.0 / 7.0);
  CHECK(w2(PhasePointd{0.0, r2 - 1e-6}) < 0.0);
  CHECK(w2(PhasePointd{0.0, r2 + 1e-6}) >= 0.0);
}

TEST_CASE("analytic negativity volume") {
  CHECK(std::abs(pnw_spats_analytic({0.0, 0.0}, 0.0).volume - kSinglePhotonVolume) < 1e-9);
  CHECK(std::abs(pnw_spats_analytic({0.5, 0.0}, 1.0).volume - kSpatsOneVolume) < 1e-9);
  for (double n : {0.0, 0.5, 2.0}) {
    const auto at = pnw_spats_analytic({n, threshold_spats(n)}, 1.0);
    CHECK(at.volume < 1e-20);
    CHECK(pnw_spats_analytic({n, threshold_spats(n) + 0.01}, 1.0).volume == 0.0);
  }
  const auto res = pnw_spats_analytic({0.0, 0.0}, 0.0);
  CHECK(res.method == NegativityMethod::kAnalytic);
  CHECK(*res.region_radius == doctest::Approx(0.5));

  // The e^{-gt} e^{zeta/xi} factor is identically one.
  for (double n : {0.0, 0.5, 2.0}) {
    for (double bar_n : {0.0, 1.0, 10.0}) {
      for (double gt : {0.0, 0.1, 0.3, 3.0}) {
        const auto c = evolved_coefficients(ChannelParams{n, gt}, bar_n);
        CHECK(std::abs(std::exp(-gt) * std::exp(c.zeta / c.xi) - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("numeric negativity volume") {
  SUBCASE("positive Gaussian has none") {
    const auto r = pnw_numeric([](const PhasePointd& pt) { return thermal_wigner(pt, 1.0); }, 6.0);
    CHECK(r.volume == 0.0);
    CHECK_FALSE(r.region_radius.has_value());
    CHECK(r.method == NegativityMethod::kQuadrature);
  }
  SUBCASE("single photon") {
    const auto r = pnw_numeric([](const PhasePointd& pt) { return spats_wigner_initial(pt, 0.0); },
                               6.0, 64, 1e-9);
    CHECK(std::abs(r.volume - kSinglePhotonVolume) < 1e-6);
    CHECK(*r.region_radius == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("two-photon Fock state has a negative ring") {
    auto w = [](const PhasePointd& pt) { return fock_wigner(pt, 2); };
    const auto r = pnw_numeric(w, 6.0, 64, 1e-9);
    const double independent = oracle::radial_negative_volume(
        [](double x) { return fock_wigner(PhasePointd{x, 0.0}, 2); }, 6.0);
    CHECK(std::abs(independent - kFockTwoVolume) < 1e-9);
    CHECK(std::abs(r.volume - kFockTwoVolume) < 1e-6);
    CHECK_FALSE(r.region_radius.has_value());  // ring, not a disk
  }
  SUBCASE("generic cell path on an off-centre function") {
    const PhaseFunction shifted = [](const PhasePointd& pt) {
      return spats_wigner_initial(PhasePointd{pt.q - 0.7, pt.p + 0.3}, 0.0);
    };
    CHECK_FALSE(is_radially_symmetric(shifted, 6.0));
    const auto r = pnw_numeric(shifted, 6.0, 32, 1e-6);
    CHECK(std::abs(r.volume - kSinglePhotonVolume) < 1e-5);
    CHECK_FALSE(r.region_radius.has_value());

    PnwOptions cells;
    cells.radial_fast_path = false;
    const auto centred = pnw_numeric(
        [](const PhasePointd& pt) { return spats_wigner_initial(pt, 1.0); }, 6.0, 32, 1e-6, cells);
    CHECK(std::abs(centred.volume - kSpatsOneVolume) < 1e-5);
  }
  SUBCASE("errors") {
    PnwOptions once;
    once.max_refinements = 0;
    CHECK_THROWS_AS(pnw_numeric([](const PhasePointd& pt) { return fock_wigner(pt, 1); }, 6.0, 64,
                                1e-8, once),
                    NumericalError);
    CHECK_THROWS_AS(pnw_numeric([](const PhasePointd&) { return 0.0; }, -1.0), ConfigError);
  }
}

TEST_CASE("negativity volume against decay time") {
  const double bar_ns[] = {0.0, 3.0 / 7.0, 1.0};
  SUBCASE("analytic and quadrature agree") {
    for (double bar_n : bar_ns) {
      for (double n : {0.0, 0.5}) {
        const double tc = threshold_spats(n);
        for (double gt = 0.0; gt <= tc + 1e-12; gt += 0.1) {
          const double a = pnw_spats_analytic({n, gt}, bar_n).volume;
          const double q = pnw_numeric(evolved(bar_n, {n, gt}), default_extent(bar_n, n), 64, 1e-9).volume;
          CHECK(std::abs(a - q) < 1e-5);
        }
        const double a = pnw_spats_analytic({n, tc}, bar_n).volume;
        const double q = pnw_numeric(evolved(bar_n, {n, tc}), default_extent(bar_n, n), 64, 1e-9).volume;
        CHECK(std::abs(a - q) < 1e-5);
      }
    }
  }
  SUBCASE("monotone non-increasing up to the threshold") {
    for (double bar_n : bar_ns) {
      for (double n : {0.0, 0.5}) {
        const double tc = threshold_spats(n);
        double prev = INFINITY;
        for (int k = 0; k < 50; ++k) {
          const double v = pnw_spats_analytic({n, tc * k / 49.0}, bar_n).volume;
          CHECK(v <= prev);
          prev = v;
        }
      }
    }
  }
  SUBCASE("hotter bath destroys negativity faster") {
    const double tc = threshold_spats(0.5);
    for (double bar_n : bar_ns) {
      CHECK(pnw_spats_analytic({0.5, 0.0}, bar_n).volume ==
            doctest::Approx(pnw_spats_analytic({0.0, 0.0}, bar_n).volume));
      for (int k = 1; k < 20; ++k) {
        const double gt = tc * k / 20.0;
        CHECK(pnw_spats_analytic({0.5, gt}, bar_n).volume <
              pnw_spats_analytic({0.0, gt}, bar_n).volume);
      }
    }
  }
  SUBCASE("nothing negative past the threshold") {
    for (double bar_n : bar_ns) {
      for (double n : {0.0, 0.5, 1.0}) {
        for (double extra : {1e-3, 0.05, 0.5}) {
          const ChannelParams ch{n, threshold_spats(n) + extra};
          CHECK(pnw_numeric(evolved(bar_n, ch), default_extent(bar_n, n)).volume == 0.0);
        }
      }
    }
  }
}
