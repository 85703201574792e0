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

#ifndef MAPSCHED_SCHEMA_HPP_
#define MAPSCHED_SCHEMA_HPP_

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "mapsched/core.hpp"

namespace mapsched {

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Members of one reducer as sorted, distinct flat input indices.
using Reducer = std::vector<InputIndex>;

// An assignment of inputs to reducers. Reducers are sets: the constructor
// sorts members and rejects repeats. Range checks need the instance and
// happen in validate()/metrics().
class MappingSchema {
 public:
  explicit MappingSchema(ProblemKind kind) : kind_(kind) {}
  MappingSchema(ProblemKind kind, std::vector<Reducer> reducers);
  MappingSchema(ProblemKind kind,
                std::initializer_list<std::initializer_list<InputIndex>> reducers);

  ProblemKind kind() const { return kind_; }
  const std::vector<Reducer>& reducers() const { return reducers_; }
  const Reducer& reducer(std::size_t r) const { return reducers_.at(r); }
  std::size_t size() const { return reducers_.size(); }
  bool empty() const { return reducers_.empty(); }

  void add_reducer(Reducer members);
  void remove_reducer(std::size_t r);

  friend bool operator==(const MappingSchema&, const MappingSchema&) = default;

 private:
  ProblemKind kind_;
  std::vector<Reducer> reducers_;
};

// Throws SchemaError if the schema's kind differs from the instance's or any
// member index is out of range.
void check_compatible(const MappingSchema& schema, const Instance& instance);

Size reducer_load(const Reducer& reducer, const Instance& instance);

// Calls fn(PairId) for every required pair whose members both sit in reducer,
// in lexicographic order.
template <typename Fn>
void for_each_hosted_pair(const Reducer& reducer, const Instance& instance, Fn&& fn) {
  if (instance.kind() == ProblemKind::A2A) {
    for (std::size_t a = 0; a < reducer.size(); ++a) {
      for (std::size_t b = a + 1; b < reducer.size(); ++b) {
        fn(PairId{reducer[a], reducer[b]});
      }
    }
    return;
  }
  const std::size_t m = instance.x_count();
  std::size_t split = 0;
  while (split < reducer.size() && reducer[split] < m) ++split;
  for (std::size_t a = 0; a < split; ++a) {
    for (std::size_t b = split; b < reducer.size(); ++b) {
      fn(PairId{reducer[a], reducer[b] - m});
    }
  }
}

std::size_t hosted_pair_count(const Reducer& reducer, const Instance& instance);

struct CapacityViolation {
  std::size_t reducer = 0;
  Size load = 0;
  friend bool operator==(const CapacityViolation&, const CapacityViolation&) = default;
};

struct ValidationReport {
  std::vector<CapacityViolation> capacity_violations;  // ascending reducer
  std::vector<PairId> uncovered_pairs;                 // lexicographic
  bool valid() const { return capacity_violations.empty() && uncovered_pairs.empty(); }
};

ValidationReport validate(const MappingSchema& schema, const Instance& instance);

struct Metrics {
  std::size_t reducer_count = 0;
  Size communication_cost = 0;
  std::vector<std::size_t> replication;  // per flat input
  Size max_load = 0;
  Size min_load = 0;  // 0 when there are no reducers
};

// Defined for invalid schemas too; only range/kind errors throw.
Metrics metrics(const MappingSchema& schema, const Instance& instance);

}  // namespace mapsched

#endif  // MAPSCHED_SCHEMA_HPP_
