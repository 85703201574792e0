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

#ifndef MAPSCHED_BENCH_HPP_
#define MAPSCHED_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mapsched/core.hpp"
#include "mapsched/heuristic.hpp"
#include "mapsched/oracle.hpp"
#include "mapsched/solver.hpp"

namespace mapsched {

class GenSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConstantSizes {
  Size size = 1;
};

// Inclusive range.
struct UniformSizes {
  Size lo = 1;
  Size hi = 1;
};

// All inputs have `base` size except `heavy_hitters` randomly placed inputs
// per side, which have base * multiplier.
struct SkewedSizes {
  Size base = 1;
  std::size_t heavy_hitters = 1;
  Size multiplier = 2;
};

using SizeDistribution = std::variant<ConstantSizes, UniformSizes, SkewedSizes>;

// Parses "constant:W", "uniform:LO,HI" or "skewed:BASE,HEAVY,MULT".
SizeDistribution parse_distribution(std::string_view text);
std::string to_string(const SizeDistribution& dist);
bool needs_seed(const SizeDistribution& dist);

struct GenSpec {
  ProblemKind kind = ProblemKind::A2A;
  std::size_t m = 1;  // A2A inputs, or |X|
  std::size_t n = 0;  // |Y|; X2Y only
  SizeDistribution distribution = ConstantSizes{};
  Size capacity = 2;
  std::uint64_t seed = 0;
};

// Deterministic for a fixed GenSpec. Feasibility is not checked.
Instance generate(const GenSpec& spec);

// Copy of the instance with a different capacity.
Instance with_capacity(const Instance& instance, Size capacity);

enum class SweepMethod { Exact, Heuristic, Oracle };
std::string_view to_string(SweepMethod method);
SweepMethod parse_sweep_method(std::string_view text);

enum class PointStatus { Optimal, FeasibleOnly, BudgetExhausted, Infeasible, Skipped };
std::string_view to_string(PointStatus status);

struct TradeoffPoint {
  Size q = 0;
  std::optional<std::size_t> z;  // absent for Infeasible and Skipped
  std::optional<Size> communication_cost;
  SweepMethod method = SweepMethod::Exact;
  PointStatus status = PointStatus::Infeasible;
};

struct TradeoffCurve {
  std::vector<TradeoffPoint> points;  // strictly increasing q
};

struct SweepOptions {
  SearchBudget budget;
  HeuristicOptions heuristic;
  OracleLimit oracle_limit;
  unsigned threads = 1;
};

// Runs `method` at every capacity in q_list (sorted and deduplicated). Cost
// comes from simulating the produced schema. Infeasible capacities and
// instances beyond the oracle limit are kept as flagged points.
TradeoffCurve sweep(const Instance& instance, std::vector<Size> q_list, SweepMethod method,
                    const SweepOptions& options = {});

// "q,z,cost,method,status" header plus one row per point.
std::string to_csv(const TradeoffCurve& curve);

}  // namespace mapsched

#endif  // MAPSCHED_BENCH_HPP_
