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

#include "mapsched/core.hpp"

#include <string>

namespace mapsched {

namespace {

void require_positive(std::span<const Size> sizes, const char* what) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= 0) {
      throw InstanceError(std::string("nonpositive size in ") + what +
                          " at index " + std::to_string(i) + ": " +
                          std::to_string(sizes[i]));
    }
  }
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  return kind == ProblemKind::A2A ? "a2a" : "x2y";
}

ProblemKind parse_problem_kind(std::string_view text) {
  if (text == "a2a" || text == "A2A") return ProblemKind::A2A;
  if (text == "x2y" || text == "X2Y") return ProblemKind::X2Y;
  throw InstanceError("unknown problem kind '" + std::string(text) + "'");
}

Instance Instance::a2a(std::vector<Size> sizes, Size capacity) {
  return make(ProblemKind::A2A, std::move(sizes), {}, {}, capacity);
}

Instance Instance::x2y(std::vector<Size> x_sizes, std::vector<Size> y_sizes,
                       Size capacity) {
  return make(ProblemKind::X2Y, {}, std::move(x_sizes), std::move(y_sizes),
              capacity);
}

Instance Instance::make(ProblemKind kind, std::vector<Size> sizes,
                        std::vector<Size> x_sizes, std::vector<Size> y_sizes,
                        Size capacity) {
  if (capacity <= 0) {
    throw InstanceError("nonpositive capacity: " + std::to_string(capacity));
  }
  if (kind == ProblemKind::A2A) {
    if (!x_sizes.empty() || !y_sizes.empty()) {
      throw InstanceError("a2a instance must not populate x_sizes/y_sizes");
    }
    require_positive(sizes, "sizes");
    return Instance(kind, std::move(sizes), 0, capacity);
  }
  if (!sizes.empty()) {
    throw InstanceError("x2y instance must not populate sizes");
  }
  require_positive(x_sizes, "x_sizes");
  require_positive(y_sizes, "y_sizes");
  const std::size_t m = x_sizes.size();
  std::vector<Size> flat = std::move(x_sizes);
  flat.insert(flat.end(), y_sizes.begin(), y_sizes.end());
  return Instance(kind, std::move(flat), m, capacity);
}

std::size_t Instance::pair_count() const {
  if (kind_ == ProblemKind::A2A) return choose2(flat_.size());
  return x_count_ * y_count();
}

std::pair<InputIndex, InputIndex> Instance::members(PairId pair) const {
  if (kind_ == ProblemKind::A2A) return {pair.first, pair.second};
  return {pair.first, x_count_ + pair.second};
}

std::size_t Instance::pair_rank(PairId pair) const {
  if (kind_ == ProblemKind::A2A) {
    const std::size_t m = flat_.size();
    const std::size_t i = pair.first;
    return i * m - i * (i + 1) / 2 + (pair.second - i - 1);
  }
  return pair.first * y_count() + pair.second;
}

std::optional<PairId> Instance::pair_of(InputIndex a, InputIndex b) const {
  if (a == b) return std::nullopt;
  if (a > b) std::swap(a, b);
  if (kind_ == ProblemKind::A2A) return PairId{a, b};
  if (a < x_count_ && b >= x_count_) return PairId{a, b - x_count_};
  return std::nullopt;
}

std::vector<PairId> required_pairs(const Instance& instance) {
  std::vector<PairId> pairs;
  pairs.reserve(instance.pair_count());
  if (instance.kind() == ProblemKind::A2A) {
    const std::size_t m = instance.input_count();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) pairs.push_back({i, j});
    }
  } else {
    for (std::size_t i = 0; i < instance.x_count(); ++i) {
      for (std::size_t j = 0; j < instance.y_count(); ++j) pairs.push_back({i, j});
    }
  }
  return pairs;
}

FeasibilityReport check_feasibility(const Instance& instance) {
  for (const PairId& pair : required_pairs(instance)) {
    const auto [a, b] = instance.members(pair);
    if (instance.size_of(a) + instance.size_of(b) > instance.capacity()) {
      return {false, pair};
    }
  }
  return {true, std::nullopt};
}

}  // namespace mapsched
