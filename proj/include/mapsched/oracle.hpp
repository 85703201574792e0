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

// Exhaustive ground-truth solver for tiny instances.
//
// The candidate pool is every maximal capacity-respecting reducer (no input
// can be added without exceeding q), collapsed to one representative per
// distinct set of hosted pairs, keeping only pair sets that are not strictly
// contained in another. For z = 1, 2, ... all z-combinations of the pool are
// enumerated in increasing index order until one hosts every required pair.
// Shares no code with the branch-and-bound solver.

#ifndef MAPSCHED_ORACLE_HPP_
#define MAPSCHED_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "mapsched/core.hpp"
#include "mapsched/schema.hpp"

namespace mapsched {

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleLimit {
  std::size_t max_a2a_inputs = 7;
  std::size_t max_x2y_pairs = 16;
};

struct OracleResult {
  std::size_t min_z = 0;
  MappingSchema witness{ProblemKind::A2A};
  std::uint64_t explored = 0;  // combinations examined
};

// Throws InfeasibleError for infeasible instances and OracleError for
// instances above the limit.
// Required pairs are tracked in a 64-bit mask, so no limit can lift the
// instance past 64 pairs or 20 inputs.
OracleResult oracle_min_z(const Instance& instance, OracleLimit limit = {});

}  // namespace mapsched

#endif  // MAPSCHED_ORACLE_HPP_
