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

// Map-to-reduce shuffle simulation. Each hosted input is shipped whole, once
// per hosting reducer. Every required pair is computed by exactly one owner:
// the lowest-index reducer that hosts both members.

#ifndef MAPSCHED_SHUFFLE_HPP_
#define MAPSCHED_SHUFFLE_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapsched/core.hpp"
#include "mapsched/schema.hpp"

namespace mapsched {

// A required pair is hosted by no reducer.
class UncoveredPairError : public SchemaError {
 public:
  explicit UncoveredPairError(PairId pair)
      : SchemaError("required pair (" + std::to_string(pair.first) + "," +
                    std::to_string(pair.second) + ") is hosted by no reducer"),
        pair_(pair) {}
  PairId pair() const { return pair_; }

 private:
  PairId pair_;
};

struct OwnershipPlan {
  std::map<PairId, std::size_t> owner;
};

// Throws UncoveredPairError naming the first uncovered pair.
OwnershipPlan plan_ownership(const MappingSchema& schema, const Instance& instance);

struct ReducerActivity {
  std::size_t inputs_hosted = 0;
  Size load = 0;
  std::size_t outputs_computed = 0;
  friend bool operator==(const ReducerActivity&, const ReducerActivity&) = default;
};

struct SimReport {
  Size bytes_shipped = 0;
  std::size_t outputs_produced = 0;
  std::vector<ReducerActivity> per_reducer;
};

// Throws SchemaError if the schema does not validate.
SimReport simulate(const MappingSchema& schema, const Instance& instance);

}  // namespace mapsched

#endif  // MAPSCHED_SHUFFLE_HPP_
