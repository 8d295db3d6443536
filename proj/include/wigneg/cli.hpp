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

#ifndef WIGNEG_CLI_HPP
#define WIGNEG_CLI_HPP

#include <ostream>

namespace wigneg {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitIo = 2,
  kExitUsage = 64,
};

/// Entry point of the `wigneg` tool. Subcommands: wigner-grid, pnw-curve,
/// threshold, verify. Results go to --out (plus a `<out>.json` sidecar) or,
/// without --out, to `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace wigneg

#endif  // WIGNEG_CLI_HPP
