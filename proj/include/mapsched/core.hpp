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

#ifndef MAPSCHED_CORE_HPP_
#define MAPSCHED_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mapsched {

// Sizes and capacities share one abstract integral unit.
using Size = std::int64_t;

// Position of an input in the instance's flat input list. For X2Y instances
// the X inputs come first (0..m-1), followed by the Y inputs (m..m+n-1).
using InputIndex = std::size_t;

enum class ProblemKind { A2A, X2Y };

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view text);

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by operations that require a feasible instance.
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A required output pair.
//   A2A: first < second, both input indices.
//   X2Y: first indexes X, second indexes Y (not flat).
struct PairId {
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const PairId&, const PairId&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PairId& p) {
    return os << "(" << p.first << "," << p.second << ")";
  }
};

// Immutable problem instance. Build with one of the named constructors; they
// reject nonpositive sizes and capacities.
class Instance {
 public:
  static Instance a2a(std::vector<Size> sizes, Size capacity);
  static Instance x2y(std::vector<Size> x_sizes, std::vector<Size> y_sizes,
                      Size capacity);
  // Generic validating constructor. The lists that do not belong to `kind`
  // must be empty.
  static Instance make(ProblemKind kind, std::vector<Size> sizes,
                       std::vector<Size> x_sizes, std::vector<Size> y_sizes,
                       Size capacity);

  ProblemKind kind() const { return kind_; }
  Size capacity() const { return capacity_; }

  // A2A sizes; empty for X2Y.
  std::span<const Size> sizes() const {
    return kind_ == ProblemKind::A2A ? std::span<const Size>(flat_)
                                     : std::span<const Size>();
  }
  // X2Y sides; empty for A2A.
  std::span<const Size> x_sizes() const {
    return kind_ == ProblemKind::X2Y
               ? std::span<const Size>(flat_).first(x_count_)
               : std::span<const Size>();
  }
  std::span<const Size> y_sizes() const {
    return kind_ == ProblemKind::X2Y
               ? std::span<const Size>(flat_).subspan(x_count_)
               : std::span<const Size>();
  }

  // All inputs in flat order.
  std::span<const Size> flat_sizes() const { return flat_; }
  std::size_t input_count() const { return flat_.size(); }
  Size size_of(InputIndex input) const { return flat_.at(input); }

  // Number of X inputs (m) for X2Y, 0 for A2A.
  std::size_t x_count() const { return x_count_; }
  std::size_t y_count() const { return kind_ == ProblemKind::X2Y ? flat_.size() - x_count_ : 0; }
  bool is_y(InputIndex input) const {
    return kind_ == ProblemKind::X2Y && input >= x_count_;
  }

  std::size_t pair_count() const;

  // Flat members of a required pair.
  std::pair<InputIndex, InputIndex> members(PairId pair) const;
  // Dense rank of a required pair in lexicographic order, in [0, pair_count).
  std::size_t pair_rank(PairId pair) const;
  // Whether two flat inputs form a required pair; if so, returns it.
  std::optional<PairId> pair_of(InputIndex a, InputIndex b) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance(ProblemKind kind, std::vector<Size> flat, std::size_t x_count,
           Size capacity)
      : kind_(kind), flat_(std::move(flat)), x_count_(x_count),
        capacity_(capacity) {}

  ProblemKind kind_;
  std::vector<Size> flat_;
  std::size_t x_count_;
  Size capacity_;
};

struct FeasibilityReport {
  bool feasible = true;
  // First required pair (lexicographic) whose two sizes exceed the capacity.
  std::optional<PairId> witness;
};

// All required pairs in lexicographic order.
std::vector<PairId> required_pairs(const Instance& instance);

FeasibilityReport check_feasibility(const Instance& instance);

// n choose 2.
constexpr std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace mapsched

#endif  // MAPSCHED_CORE_HPP_
