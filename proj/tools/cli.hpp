// Copyright 2026 The strongeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STRONGEO_TOOLS_CLI_HPP
#define STRONGEO_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace strongeo::cli {

// Process exit codes of the sgeo tool.
enum ExitCode : int {
  kOk = 0,
  kInvalidWitness = 1,     // verify: the witness was read but does not verify
  kUsage = 2,              // bad arguments, unreadable/malformed input, disconnected graph
  kResource = 3,           // generation or search limits exceeded
  kIndeterminate = 4,      // solve: budget hit before optimality was proven
  kTheoremViolation = 5,   // reduce --check: sg(gadget) != gamma + n or a property failed
  kInternal = 6,           // a construction failed its own consistency check
};

/// Runs one sgeo invocation. args excludes the program name. Normal output
/// goes to `out` unless redirected with --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongeo::cli

#endif  // STRONGEO_TOOLS_CLI_HPP
