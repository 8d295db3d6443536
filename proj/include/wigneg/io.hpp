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

#ifndef WIGNEG_IO_HPP
#define WIGNEG_IO_HPP

#include <ostream>
#include <string>

#include <json.hpp>

#include "wigneg/grid.hpp"
#include "wigneg/negativity.hpp"
#include "wigneg/threshold.hpp"

namespace wigneg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "wigneg";
inline constexpr const char* kToolVersion = WIGNEG_VERSION;

/// 17 significant digits, '.' separator regardless of locale.
std::string format_number(double value);

/// Header "q,p,w", then one LF-terminated row per grid node, q outer.
void write_grid_csv(std::ostream& os, const WignerGrid& grid);

/// One {"q","p","w"} object per line, same order as the CSV.
void write_grid_jsonl(std::ostream& os, const WignerGrid& grid);

/// Extents, resolution, cell area, min/max and trapezoidal integral.
Json grid_summary(const WignerGrid& grid);

Json to_json(const ThresholdReport& report);
Json to_json(const TheoremReport& report);
Json to_json(const NegativityResult& result);

std::string to_string(ThresholdMethod method);
std::string to_string(NegativityMethod method);

}  // namespace wigneg

#endif  // WIGNEG_IO_HPP
