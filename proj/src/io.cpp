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

#include "wigneg/io.hpp"

#include <cstdio>

namespace wigneg {

std::string format_number(double value) {
  char buffer[40];
  const int len = std::snprintf(buffer, sizeof buffer, "%.17g", value);
  std::string out(buffer, buffer + len);
  // snprintf follows LC_NUMERIC; force the '.' separator.
  for (char& c : out) {
    if (c == ',') c = '.';
  }
  return out;
}

void write_grid_csv(std::ostream& os, const WignerGrid& grid) {
  os << "q,p,w\n";
  const auto& v = grid.values();
  for (Eigen::Index i = 0; i < grid.nq(); ++i) {
    const std::string q = format_number(grid.q(i));
    for (Eigen::Index j = 0; j < grid.np(); ++j) {
      os << q << ',' << format_number(grid.p(j)) << ','
         << format_number(v(i, j)) << '\n';
    }
  }
}

void write_grid_jsonl(std::ostream& os, const WignerGrid& grid) {
  const auto& v = grid.values();
  for (Eigen::Index i = 0; i < grid.nq(); ++i) {
    for (Eigen::Index j = 0; j < grid.np(); ++j) {
      os << Json{{"q", grid.q(i)}, {"p", grid.p(j)}, {"w", v(i, j)}}.dump()
         << '\n';
    }
  }
}

Json grid_summary(const WignerGrid& grid) {
  const auto& e = grid.extents();
  return Json{{"q_min", e.q_min},
              {"q_max", e.q_max},
              {"p_min", e.p_min},
              {"p_max", e.p_max},
              {"nq", grid.nq()},
              {"np", grid.np()},
              {"cell_area", grid.cell_area()},
              {"min", grid.values().minCoeff()},
              {"max", grid.values().maxCoeff()},
              {"integral", grid.trapezoid_integral()},
              {"normalization_tol", grid.normalization_tol()}};
}

std::string to_string(ThresholdMethod method) {
  return method == ThresholdMethod::kOriginSignRoot ? "origin-sign-root"
                                                    : "pnw-vanishing";
}

std::string to_string(NegativityMethod method) {
  return method == NegativityMethod::kAnalytic ? "analytic" : "quadrature";
}

Json to_json(const ThresholdReport& report) {
  return Json{{"n", report.n},
              {"bar_n", report.bar_n},
              {"gamma_t_c_analytic", report.gamma_t_c_analytic},
              {"gamma_t_c_numeric", report.gamma_t_c_numeric},
              {"method", to_string(report.method)},
              {"residual", report.residual}};
}

Json to_json(const TheoremReport& report) {
  Json j{{"state_id", report.state_id},
         {"n", report.n},
         {"gamma_t_c", report.gamma_t_c},
         {"cutoff", report.cutoff},
         {"w_origin_at_threshold", report.w_origin_at_threshold},
         {"min_w_at_threshold", report.min_w_at_threshold}};
  j["q_identity_residual"] =
      report.q_identity_residual ? Json(*report.q_identity_residual) : Json();
  j["q_identity_constant"] =
      report.q_identity_constant ? Json(*report.q_identity_constant) : Json();
  j["scope"] = "fock-diagonal";
  j["passed"] = report.passed;
  return j;
}

Json to_json(const NegativityResult& result) {
  Json j{{"volume", result.volume}, {"method", to_string(result.method)}};
  j["region_radius"] =
      result.region_radius ? Json(*result.region_radius) : Json();
  return j;
}

}  // namespace wigneg
