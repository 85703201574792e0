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

#include "mapsched/shuffle.hpp"

#include <limits>

namespace mapsched {

namespace {

constexpr std::size_t kUnowned = std::numeric_limits<std::size_t>::max();

// Owner per pair rank.
std::vector<std::size_t> owners_by_rank(const MappingSchema& schema, const Instance& instance) {
  check_compatible(schema, instance);
  std::vector<std::size_t> owner(instance.pair_count(), kUnowned);
  for (std::size_t r = 0; r < schema.size(); ++r) {
    for_each_hosted_pair(schema.reducer(r), instance, [&](PairId p) {
      std::size_t& slot = owner[instance.pair_rank(p)];
      if (slot == kUnowned) slot = r;
    });
  }
  for (const PairId& p : required_pairs(instance)) {
    if (owner[instance.pair_rank(p)] == kUnowned) throw UncoveredPairError(p);
  }
  return owner;
}

}  // namespace

OwnershipPlan plan_ownership(const MappingSchema& schema, const Instance& instance) {
  const std::vector<std::size_t> owner = owners_by_rank(schema, instance);
  OwnershipPlan plan;
  for (const PairId& p : required_pairs(instance)) {
    plan.owner.emplace(p, owner[instance.pair_rank(p)]);
  }
  return plan;
}

SimReport simulate(const MappingSchema& schema, const Instance& instance) {
  const std::vector<std::size_t> owner = owners_by_rank(schema, instance);
  const ValidationReport validation = validate(schema, instance);
  if (!validation.capacity_violations.empty()) {
    const CapacityViolation& v = validation.capacity_violations.front();
    throw SchemaError("reducer " + std::to_string(v.reducer) + " carries load " +
                      std::to_string(v.load) + " above capacity " +
                      std::to_string(instance.capacity()));
  }

  SimReport report;
  report.per_reducer.resize(schema.size());
  for (std::size_t r = 0; r < schema.size(); ++r) {
    ReducerActivity& activity = report.per_reducer[r];
    const Reducer& members = schema.reducer(r);
    activity.inputs_hosted = members.size();
    for (InputIndex i : members) activity.load += instance.size_of(i);
    for_each_hosted_pair(members, instance, [&](PairId p) {
      if (owner[instance.pair_rank(p)] == r) ++activity.outputs_computed;
    });
  }
  for (const ReducerActivity& activity : report.per_reducer) {
    report.bytes_shipped += activity.load;
    report.outputs_produced += activity.outputs_computed;
  }
  return report;
}

}  // namespace mapsched
