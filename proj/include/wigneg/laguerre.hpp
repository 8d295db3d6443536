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

#ifndef WIGNEG_LAGUERRE_HPP
#define WIGNEG_LAGUERRE_HPP

#include <cmath>
#include <string>

#include "wigneg/errors.hpp"

namespace wigneg {

/// Largest Laguerre index the forward recurrence is trusted for.
inline constexpr int kMaxLaguerreIndex = 500;

inline void check_laguerre_index(int l) {
  if (l < 0 || l > kMaxLaguerreIndex) {
    throw DomainError("Laguerre index " + std::to_string(l) +
                      " outside [0, " + std::to_string(kMaxLaguerreIndex) +
                      "]");
  }
}

/// e^{-x/2} L_l(x), by the three-term recurrence started from the scaled
/// values so nothing overflows for large x. |result| <= 1 for x >= 0.
template <typename Scalar>
Scalar scaled_laguerre(int l, Scalar x) {
  check_laguerre_index(l);
  using std::exp;
  Scalar prev = exp(-x / Scalar(2));
  if (l == 0) return prev;
  Scalar cur = (Scalar(1) - x) * prev;
  for (int k = 1; k < l; ++k) {
    const Scalar next =
        ((Scalar(2 * k + 1) - x) * cur - Scalar(k) * prev) / Scalar(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace wigneg

#endif  // WIGNEG_LAGUERRE_HPP
