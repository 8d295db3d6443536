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

#ifndef WIGNEG_ERRORS_HPP
#define WIGNEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wigneg {

// Input outside the mathematical domain of an operation (negative photon
// numbers, Laguerre index past the recurrence bound, p_0 != 0 where a
// zero-vacuum state is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A solver configuration that cannot run (explicit step above the stability
// bound, degenerate grid).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iterative method gave up: step control stalled, quadrature did not settle,
// NaN appeared mid-run. `estimate` and `error_estimate` carry the last values
// seen, `iteration` the step or refinement index at failure.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double estimate = 0.0,
                 double error_estimate = 0.0, long iteration = -1)
      : std::runtime_error(what),
        estimate_(estimate),
        error_estimate_(error_estimate),
        iteration_(iteration) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }
  long iteration() const noexcept { return iteration_; }

 private:
  double estimate_;
  double error_estimate_;
  long iteration_;
};

}  // namespace wigneg

#endif  // WIGNEG_ERRORS_HPP
