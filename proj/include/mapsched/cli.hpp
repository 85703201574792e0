// Copyright 2026 The mapsched Authors
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

#ifndef MAPSCHED_CLI_HPP_
#define MAPSCHED_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mapsched::cli {

// Process exit codes.
enum ExitStatus : int {
  kSuccess = 0,
  kUsageOrIo = 1,
  kNotProvenOptimal = 2,
  kInfeasible = 3,
  kInvalidSchema = 4,
};

// Subcommands: gen, validate, solve, simulate, sweep, oracle.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapsched::cli

#endif  // MAPSCHED_CLI_HPP_
