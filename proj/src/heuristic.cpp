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

#include "mapsched/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace mapsched {

namespace {

void require_feasible(const Instance& instance, const char* who) {
  const FeasibilityReport report = check_feasibility(instance);
  if (!report.feasible) {
    throw InfeasibleError(std::string(who) + ": pair (" +
                          std::to_string(report.witness->first) + "," +
                          std::to_string(report.witness->second) +
                          ") cannot share any reducer");
  }
}

Reducer merge_bins(const std::vector<std::size_t>& a, std::size_t a_offset,
                   const std::vector<std::size_t>& b, std::size_t b_offset) {
  Reducer out;
  out.reserve(a.size() + b.size());
  for (std::size_t i : a) out.push_back(i + a_offset);
  for (std::size_t i : b) out.push_back(i + b_offset);
  return out;
}

Size total_size(const Instance& instance) {
  const auto sizes = instance.flat_sizes();
  return std::accumulate(sizes.begin(), sizes.end(), Size{0});
}

}  // namespace

BinPacking ffd_pack(std::span<const Size> sizes, Size bin_capacity) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] > bin_capacity) {
      throw PackingError("item " + std::to_string(i) + " of size " +
                         std::to_string(sizes[i]) + " exceeds bin capacity " +
                         std::to_string(bin_capacity));
    }
  }
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  BinPacking packing;
  packing.bin_capacity = bin_capacity;
  for (std::size_t item : order) {
    std::size_t bin = 0;
    while (bin < packing.bins.size() && packing.loads[bin] + sizes[item] > bin_capacity) {
      ++bin;
    }
    if (bin == packing.bins.size()) {
      packing.bins.emplace_back();
      packing.loads.push_back(0);
    }
    packing.bins[bin].push_back(item);
    packing.loads[bin] += sizes[item];
  }
  for (auto& bin : packing.bins) std::sort(bin.begin(), bin.end());
  return packing;
}

MappingSchema a2a_pair_cover(const Instance& instance) {
  if (instance.kind() != ProblemKind::A2A) {
    throw std::invalid_argument("a2a_pair_cover requires an a2a instance");
  }
  require_feasible(instance, "a2a_pair_cover");
  const Size group_capacity = instance.capacity() / 2;
  MappingSchema schema(ProblemKind::A2A);
  BinPacking packing;
  try {
    packing = ffd_pack(instance.sizes(), group_capacity);
  } catch (const PackingError& e) {
    throw HeuristicInapplicable(InputSide::All,
                                std::string("a2a_pair_cover: ") + e.what());
  }
  const auto& bins = packing.bins;
  if (bins.size() == 1) {
    schema.add_reducer(bins.front());
    return schema;
  }
  for (std::size_t a = 0; a < bins.size(); ++a) {
    for (std::size_t b = a + 1; b < bins.size(); ++b) {
      schema.add_reducer(merge_bins(bins[a], 0, bins[b], 0));
    }
  }
  return schema;
}

MappingSchema x2y_grid_cover(const Instance& instance, double x_fraction) {
  if (instance.kind() != ProblemKind::X2Y) {
    throw std::invalid_argument("x2y_grid_cover requires an x2y instance");
  }
  if (!(x_fraction > 0.0 && x_fraction < 1.0)) {
    throw std::invalid_argument("x_fraction must lie strictly between 0 and 1");
  }
  require_feasible(instance, "x2y_grid_cover");
  const Size x_capacity =
      static_cast<Size>(std::floor(x_fraction * static_cast<double>(instance.capacity())));
  const Size y_capacity = instance.capacity() - x_capacity;

  BinPacking x_bins;
  BinPacking y_bins;
  try {
    x_bins = ffd_pack(instance.x_sizes(), x_capacity);
  } catch (const PackingError& e) {
    throw HeuristicInapplicable(InputSide::X, std::string("x2y_grid_cover: X ") + e.what());
  }
  try {
    y_bins = ffd_pack(instance.y_sizes(), y_capacity);
  } catch (const PackingError& e) {
    throw HeuristicInapplicable(InputSide::Y, std::string("x2y_grid_cover: Y ") + e.what());
  }

  MappingSchema schema(ProblemKind::X2Y);
  const std::size_t m = instance.x_count();
  for (const auto& xb : x_bins.bins) {
    for (const auto& yb : y_bins.bins) schema.add_reducer(merge_bins(xb, 0, yb, m));
  }
  return schema;
}

MappingSchema greedy_pair_cover(const Instance& instance) {
  require_feasible(instance, "greedy_pair_cover");
  std::vector<Reducer> reducers;
  std::vector<Size> loads;
  std::vector<char> covered(instance.pair_count(), 0);

  auto add_member = [&](std::size_t r, InputIndex input) {
    for (InputIndex other : reducers[r]) {
      if (auto p = instance.pair_of(input, other)) covered[instance.pair_rank(*p)] = 1;
    }
    reducers[r].insert(std::lower_bound(reducers[r].begin(), reducers[r].end(), input), input);
    loads[r] += instance.size_of(input);
  };
  auto contains = [&](std::size_t r, InputIndex input) {
    return std::binary_search(reducers[r].begin(), reducers[r].end(), input);
  };

  for (const PairId& pair : required_pairs(instance)) {
    if (covered[instance.pair_rank(pair)]) continue;
    const auto [a, b] = instance.members(pair);
    std::optional<std::size_t> target;
    for (std::size_t r = 0; r < reducers.size() && !target; ++r) {
      Size extra = 0;
      if (!contains(r, a)) extra += instance.size_of(a);
      if (!contains(r, b)) extra += instance.size_of(b);
      if (loads[r] + extra <= instance.capacity()) target = r;
    }
    if (!target) {
      reducers.emplace_back();
      loads.push_back(0);
      target = reducers.size() - 1;
    }
    if (!contains(*target, a)) add_member(*target, a);
    if (!contains(*target, b)) add_member(*target, b);
  }
  return MappingSchema(instance.kind(), std::move(reducers));
}

MappingSchema prune_redundant(const MappingSchema& schema, const Instance& instance) {
  if (!validate(schema, instance).valid()) {
    throw SchemaError("prune_redundant requires a valid schema");
  }
  std::vector<Reducer> reducers = schema.reducers();
  std::vector<Size> loads;
  loads.reserve(reducers.size());
  std::vector<std::size_t> hosts(instance.pair_count(), 0);
  for (const Reducer& r : reducers) {
    loads.push_back(reducer_load(r, instance));
    for_each_hosted_pair(r, instance, [&](PairId p) { ++hosts[instance.pair_rank(p)]; });
  }

  for (;;) {
    std::optional<std::size_t> victim;
    for (std::size_t r = 0; r < reducers.size(); ++r) {
      bool removable = true;
      for_each_hosted_pair(reducers[r], instance, [&](PairId p) {
        removable = removable && hosts[instance.pair_rank(p)] >= 2;
      });
      if (removable && (!victim || loads[r] >= loads[*victim])) victim = r;
    }
    if (!victim) break;
    for_each_hosted_pair(reducers[*victim], instance,
                         [&](PairId p) { --hosts[instance.pair_rank(p)]; });
    reducers.erase(reducers.begin() + static_cast<std::ptrdiff_t>(*victim));
    loads.erase(loads.begin() + static_cast<std::ptrdiff_t>(*victim));
  }
  return MappingSchema(schema.kind(), std::move(reducers));
}

MappingSchema best_heuristic_schema(const Instance& instance, const HeuristicOptions& options) {
  require_feasible(instance, "heuristic");
  if (instance.pair_count() == 0) return MappingSchema(instance.kind());
  if (total_size(instance) <= instance.capacity()) {
    Reducer all(instance.input_count());
    std::iota(all.begin(), all.end(), InputIndex{0});
    return MappingSchema(instance.kind(), {std::move(all)});
  }

  std::vector<MappingSchema> candidates;
  try {
    candidates.push_back(prune_redundant(instance.kind() == ProblemKind::A2A
                                             ? a2a_pair_cover(instance)
                                             : x2y_grid_cover(instance, options.x_fraction),
                                         instance));
  } catch (const HeuristicInapplicable&) {
  }
  candidates.push_back(prune_redundant(greedy_pair_cover(instance), instance));

  std::size_t best = 0;
  Size best_cost = metrics(candidates[0], instance).communication_cost;
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    const Size cost = metrics(candidates[c], instance).communication_cost;
    if (candidates[c].size() < candidates[best].size() ||
        (candidates[c].size() == candidates[best].size() && cost < best_cost)) {
      best = c;
      best_cost = cost;
    }
  }
  return candidates[best];
}

}  // namespace mapsched
