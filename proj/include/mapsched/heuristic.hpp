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

#ifndef MAPSCHED_HEURISTIC_HPP_
#define MAPSCHED_HEURISTIC_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapsched/core.hpp"
#include "mapsched/schema.hpp"

namespace mapsched {

class PackingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class InputSide { All, X, Y };

// The construction cannot be applied to this instance (an input is larger
// than its group capacity). side() names which input list is at fault.
class HeuristicInapplicable : public std::runtime_error {
 public:
  HeuristicInapplicable(InputSide side, const std::string& what)
      : std::runtime_error(what), side_(side) {}
  InputSide side() const { return side_; }

 private:
  InputSide side_;
};

struct BinPacking {
  // Indices into the packed size list, ascending within each bin. Bins are
  // in opening order.
  std::vector<std::vector<std::size_t>> bins;
  std::vector<Size> loads;
  Size bin_capacity = 0;
};

// First-fit decreasing. Items are visited by size descending, ties by index
// ascending. Throws PackingError if any item exceeds bin_capacity.
BinPacking ffd_pack(std::span<const Size> sizes, Size bin_capacity);

// Packs inputs into groups of capacity floor(q/2) and emits one reducer per
// pair of groups, or a single reducer when only one group results.
MappingSchema a2a_pair_cover(const Instance& instance);

// Packs X into groups of floor(x_fraction*q) and Y into groups of the
// remaining capacity, then emits one reducer per (X group, Y group).
MappingSchema x2y_grid_cover(const Instance& instance, double x_fraction = 0.5);

// Walks required pairs lexicographically; an uncovered pair joins the first
// reducer that can absorb its missing members, else opens a new reducer.
// Applies to every feasible instance.
MappingSchema greedy_pair_cover(const Instance& instance);

// Repeatedly drops the heaviest reducer whose hosted pairs are all hosted
// elsewhere (ties: higher index first) until none is removable.
MappingSchema prune_redundant(const MappingSchema& schema, const Instance& instance);

struct HeuristicOptions {
  double x_fraction = 0.5;
};

// Best pruned schema among the applicable constructions: one reducer holding
// everything when it fits, otherwise the group cover for the instance kind
// and the greedy pair cover. Fewest reducers wins, then lowest cost, then
// the group cover.
MappingSchema best_heuristic_schema(const Instance& instance,
                                    const HeuristicOptions& options = {});

}  // namespace mapsched

#endif  // MAPSCHED_HEURISTIC_HPP_
