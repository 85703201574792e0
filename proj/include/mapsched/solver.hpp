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

// Exact minimum-reducer search.
//
// solve_exact deepens on the reducer count z, starting at the covering lower
// bound. Each level is a depth-first search that takes the lexicographically
// first uncovered pair and either adds its missing members to an opened
// reducer that can absorb them or opens one new reducer. Opened reducers are
// interchangeable, so opening is a single branch tried last. Nodes are cut
// when the uncovered pairs exceed what the remaining capacity can host.

#ifndef MAPSCHED_SOLVER_HPP_
#define MAPSCHED_SOLVER_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mapsched/core.hpp"
#include "mapsched/heuristic.hpp"
#include "mapsched/schema.hpp"

namespace mapsched {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::chrono::milliseconds max_time{60'000};
};

enum class SolveStatus { Optimal, FeasibleOnly, Infeasible, BudgetExhausted };

std::string_view to_string(SolveStatus status);

struct SolveReport {
  std::optional<MappingSchema> schema;  // absent only when Infeasible
  std::size_t z = 0;
  std::size_t lower_bound = 0;
  SolveStatus status = SolveStatus::Infeasible;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveOptions {
  // Worker threads for the deepening levels. The reported schema does not
  // depend on this unless the budget trips.
  unsigned threads = 1;
  HeuristicOptions heuristic;
};

// Largest number of required pairs a single reducer can host.
std::size_t max_pairs_per_reducer(const Instance& instance);

// ceil(|required pairs| / max_pairs_per_reducer). Throws InfeasibleError.
std::size_t lower_bound(const Instance& instance);

enum class DecisionOutcome { Found, NotFound, BudgetExhausted };

struct DecisionResult {
  DecisionOutcome outcome = DecisionOutcome::NotFound;
  std::optional<MappingSchema> schema;
  std::uint64_t nodes_explored = 0;
};

// Decision form: does a schema with at most z reducers exist?
DecisionResult find_schema_within(const Instance& instance, std::size_t z,
                                  const SearchBudget& budget = {});

SolveReport solve_exact(const Instance& instance, const SearchBudget& budget = {},
                        const SolveOptions& options = {});

// Heuristic schema only. Optimal when it meets the lower bound, otherwise
// FeasibleOnly.
SolveReport solve_heuristic(const Instance& instance, const HeuristicOptions& options = {});

}  // namespace mapsched

#endif  // MAPSCHED_SOLVER_HPP_
