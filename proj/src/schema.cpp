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

#include "mapsched/schema.hpp"

#include <algorithm>
#include <string>

namespace mapsched {

namespace {

Reducer normalize(Reducer members) {
  std::sort(members.begin(), members.end());
  auto dup = std::adjacent_find(members.begin(), members.end());
  if (dup != members.end()) {
    throw SchemaError("input " + std::to_string(*dup) +
                      " repeated within one reducer");
  }
  return members;
}

}  // namespace

MappingSchema::MappingSchema(ProblemKind kind, std::vector<Reducer> reducers)
    : kind_(kind) {
  reducers_.reserve(reducers.size());
  for (Reducer& r : reducers) reducers_.push_back(normalize(std::move(r)));
}

MappingSchema::MappingSchema(
    ProblemKind kind,
    std::initializer_list<std::initializer_list<InputIndex>> reducers)
    : kind_(kind) {
  for (const auto& r : reducers) reducers_.push_back(normalize(Reducer(r)));
}

void MappingSchema::add_reducer(Reducer members) {
  reducers_.push_back(normalize(std::move(members)));
}

void MappingSchema::remove_reducer(std::size_t r) {
  if (r >= reducers_.size()) throw SchemaError("reducer index out of range");
  reducers_.erase(reducers_.begin() + static_cast<std::ptrdiff_t>(r));
}

void check_compatible(const MappingSchema& schema, const Instance& instance) {
  if (schema.kind() != instance.kind()) {
    throw SchemaError(std::string("schema kind ") +
                      std::string(to_string(schema.kind())) +
                      " does not match instance kind " +
                      std::string(to_string(instance.kind())));
  }
  const std::size_t n = instance.input_count();
  for (std::size_t r = 0; r < schema.size(); ++r) {
    const Reducer& members = schema.reducer(r);
    if (!members.empty() && members.back() >= n) {
      throw SchemaError("reducer " + std::to_string(r) + " references input " +
                        std::to_string(members.back()) + " but the instance has " +
                        std::to_string(n) + " inputs");
    }
  }
}

Size reducer_load(const Reducer& reducer, const Instance& instance) {
  Size load = 0;
  for (InputIndex i : reducer) load += instance.size_of(i);
  return load;
}

std::size_t hosted_pair_count(const Reducer& reducer, const Instance& instance) {
  if (instance.kind() == ProblemKind::A2A) return choose2(reducer.size());
  const auto xs = static_cast<std::size_t>(
      std::lower_bound(reducer.begin(), reducer.end(), instance.x_count()) -
      reducer.begin());
  return xs * (reducer.size() - xs);
}

ValidationReport validate(const MappingSchema& schema, const Instance& instance) {
  check_compatible(schema, instance);
  ValidationReport report;
  std::vector<char> covered(instance.pair_count(), 0);
  for (std::size_t r = 0; r < schema.size(); ++r) {
    const Reducer& members = schema.reducer(r);
    const Size load = reducer_load(members, instance);
    if (load > instance.capacity()) report.capacity_violations.push_back({r, load});
    for_each_hosted_pair(members, instance,
                         [&](PairId p) { covered[instance.pair_rank(p)] = 1; });
  }
  for (const PairId& p : required_pairs(instance)) {
    if (!covered[instance.pair_rank(p)]) report.uncovered_pairs.push_back(p);
  }
  return report;
}

Metrics metrics(const MappingSchema& schema, const Instance& instance) {
  check_compatible(schema, instance);
  Metrics out;
  out.reducer_count = schema.size();
  out.replication.assign(instance.input_count(), 0);
  bool first = true;
  for (const Reducer& members : schema.reducers()) {
    const Size load = reducer_load(members, instance);
    out.communication_cost += load;
    for (InputIndex i : members) ++out.replication[i];
    out.max_load = first ? load : std::max(out.max_load, load);
    out.min_load = first ? load : std::min(out.min_load, load);
    first = false;
  }
  return out;
}

}  // namespace mapsched
