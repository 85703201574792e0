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

#include "mapsched/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

namespace mapsched {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Size> sorted_prefix(std::span<const Size> sizes) {
  std::vector<Size> sorted(sizes.begin(), sizes.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Size> prefix(sorted.size() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) prefix[i + 1] = prefix[i] + sorted[i];
  return prefix;
}

// Largest t with prefix[t] <= room, capped at limit.
std::size_t fit_count(const std::vector<Size>& prefix, Size room, std::size_t limit) {
  const auto it = std::upper_bound(prefix.begin(), prefix.end(), room);
  const auto t = static_cast<std::size_t>(it - prefix.begin()) - 1;
  return std::min(t, limit);
}

void require_feasible(const Instance& instance) {
  const FeasibilityReport report = check_feasibility(instance);
  if (!report.feasible) {
    throw InfeasibleError("pair (" + std::to_string(report.witness->first) + "," +
                          std::to_string(report.witness->second) +
                          ") cannot share any reducer");
  }
}

// Upper bounds on the pairs a reducer can host given what it already holds.
class PairPotential {
 public:
  explicit PairPotential(const Instance& instance)
      : kind_(instance.kind()), m_(instance.x_count()), n_(instance.y_count()),
        total_(instance.input_count()) {
    if (kind_ == ProblemKind::A2A) {
      all_prefix_ = sorted_prefix(instance.sizes());
    } else {
      x_prefix_ = sorted_prefix(instance.x_sizes());
      y_prefix_ = sorted_prefix(instance.y_sizes());
    }
  }

  // Most pairs a reducer with `xs` X members and `ys` Y members (A2A: xs
  // members, ys = 0) could host after adding inputs worth at most `room`.
  std::size_t reachable(std::size_t xs, std::size_t ys, Size room) const {
    if (kind_ == ProblemKind::A2A) {
      const std::size_t t = fit_count(all_prefix_, room, total_ - xs);
      return choose2(xs + t);
    }
    std::size_t best = xs * ys;
    for (std::size_t s = 0; s + xs <= m_ && x_prefix_[s] <= room; ++s) {
      const std::size_t u = fit_count(y_prefix_, room - x_prefix_[s], n_ - ys);
      best = std::max(best, (xs + s) * (ys + u));
    }
    return best;
  }

 private:
  ProblemKind kind_;
  std::size_t m_;
  std::size_t n_;
  std::size_t total_;
  std::vector<Size> all_prefix_;
  std::vector<Size> x_prefix_;
  std::vector<Size> y_prefix_;
};

struct SharedControl {
  std::uint64_t max_nodes = 0;
  Clock::time_point deadline;
  // Smallest level known to succeed; deeper levels stop early.
  std::atomic<std::size_t> best_level{std::numeric_limits<std::size_t>::max()};
};

enum class LevelOutcome { Found, NotFound, Budget, Cancelled };

class LevelSearch {
 public:
  LevelSearch(const Instance& instance, std::size_t z, const PairPotential& potential,
              SharedControl& control, std::atomic<std::uint64_t>& counter)
      : instance_(instance), z_(z), potential_(potential), control_(control), counter_(counter),
        inputs_(instance.input_count()), pairs_(required_pairs(instance)),
        covered_(pairs_.size(), 0), uncovered_(pairs_.size()),
        max_pairs_(max_pairs_per_reducer(instance)) {
    members_.reserve(z);
    loads_.reserve(z);
  }

  LevelOutcome run() {
    if (pairs_.empty()) return LevelOutcome::Found;
    return dfs(0);
  }

  std::uint64_t nodes() const { return nodes_; }

  MappingSchema schema() const { return MappingSchema(instance_.kind(), members_); }

 private:
  LevelOutcome dfs(std::size_t cursor) {
    ++nodes_;
    const std::uint64_t total = counter_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > control_.max_nodes) return LevelOutcome::Budget;
    if ((nodes_ & 0x3FF) == 0) {
      if (Clock::now() > control_.deadline) return LevelOutcome::Budget;
      if (control_.best_level.load(std::memory_order_relaxed) < z_) {
        return LevelOutcome::Cancelled;
      }
    }

    while (cursor < pairs_.size() && covered_[cursor] > 0) ++cursor;
    if (cursor == pairs_.size()) return LevelOutcome::Found;
    if (!enough_room()) return LevelOutcome::NotFound;

    const auto [a, b] = instance_.members(pairs_[cursor]);
    const Size size_a = instance_.size_of(a);
    const Size size_b = instance_.size_of(b);
    for (std::size_t r = 0; r < members_.size(); ++r) {
      const bool has_a = holds(r, a);
      const bool has_b = holds(r, b);
      const Size extra = (has_a ? 0 : size_a) + (has_b ? 0 : size_b);
      if (loads_[r] + extra > instance_.capacity()) continue;
      if (!has_a) add_member(r, a);
      if (!has_b) add_member(r, b);
      const LevelOutcome outcome = dfs(cursor + 1);
      if (outcome != LevelOutcome::NotFound) return outcome;
      if (!has_b) remove_last_member(r);
      if (!has_a) remove_last_member(r);
    }
    if (members_.size() < z_) {
      open_reducer();
      const std::size_t r = members_.size() - 1;
      add_member(r, a);
      add_member(r, b);
      const LevelOutcome outcome = dfs(cursor + 1);
      if (outcome != LevelOutcome::NotFound) return outcome;
      close_reducer();
    }
    return LevelOutcome::NotFound;
  }

  bool enough_room() const {
    const bool a2a = instance_.kind() == ProblemKind::A2A;
    std::size_t capacity_left = (z_ - members_.size()) * max_pairs_;
    for (std::size_t r = 0; r < members_.size() && capacity_left < uncovered_; ++r) {
      const std::size_t xs = a2a ? members_[r].size() : xs_[r];
      const std::size_t ys = a2a ? 0 : members_[r].size() - xs_[r];
      const std::size_t now = a2a ? choose2(xs) : xs * ys;
      const std::size_t reach = std::min(
          max_pairs_, potential_.reachable(xs, ys, instance_.capacity() - loads_[r]));
      if (reach > now) capacity_left += reach - now;
    }
    return capacity_left >= uncovered_;
  }

  bool holds(std::size_t r, InputIndex input) const { return in_[r * inputs_ + input] != 0; }

  void open_reducer() {
    members_.emplace_back();
    loads_.push_back(0);
    xs_.push_back(0);
    in_.resize(members_.size() * inputs_, 0);
  }

  void close_reducer() {
    while (!members_.back().empty()) remove_last_member(members_.size() - 1);
    members_.pop_back();
    loads_.pop_back();
    xs_.pop_back();
    in_.resize(members_.size() * inputs_);
  }

  void add_member(std::size_t r, InputIndex input) {
    for (InputIndex other : members_[r]) {
      if (auto p = instance_.pair_of(input, other)) {
        if (covered_[instance_.pair_rank(*p)]++ == 0) --uncovered_;
      }
    }
    members_[r].push_back(input);
    loads_[r] += instance_.size_of(input);
    if (!instance_.is_y(input)) ++xs_[r];
    in_[r * inputs_ + input] = 1;
  }

  void remove_last_member(std::size_t r) {
    const InputIndex input = members_[r].back();
    members_[r].pop_back();
    for (InputIndex other : members_[r]) {
      if (auto p = instance_.pair_of(input, other)) {
        if (--covered_[instance_.pair_rank(*p)] == 0) ++uncovered_;
      }
    }
    loads_[r] -= instance_.size_of(input);
    if (!instance_.is_y(input)) --xs_[r];
    in_[r * inputs_ + input] = 0;
  }

  const Instance& instance_;
  std::size_t z_;
  const PairPotential& potential_;
  SharedControl& control_;
  std::atomic<std::uint64_t>& counter_;  // nodes charged against max_nodes
  std::size_t inputs_;
  std::vector<PairId> pairs_;
  std::vector<std::uint32_t> covered_;  // by pair rank, which matches pairs_ order
  std::size_t uncovered_;
  std::size_t max_pairs_;
  std::vector<Reducer> members_;
  std::vector<Size> loads_;
  std::vector<std::size_t> xs_;  // members that are not Y inputs
  std::vector<char> in_;
  std::uint64_t nodes_ = 0;
};

struct LevelResult {
  LevelOutcome outcome = LevelOutcome::Cancelled;
  std::optional<MappingSchema> schema;
  std::uint64_t nodes = 0;
};

LevelResult run_level(const Instance& instance, std::size_t z, const PairPotential& potential,
                      SharedControl& control, std::atomic<std::uint64_t>& counter) {
  LevelSearch search(instance, z, potential, control, counter);
  LevelResult result;
  result.outcome = search.run();
  result.nodes = search.nodes();
  if (result.outcome == LevelOutcome::Found) result.schema = search.schema();
  return result;
}

// Rewrites parallel level results into what one shared counter would have
// produced running levels lb, lb+1, ... in order.
void replay_budget(std::vector<LevelResult>& levels, std::uint64_t max_nodes) {
  std::uint64_t used = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    LevelResult& level = levels[i];
    const bool finished =
        level.outcome == LevelOutcome::Found || level.outcome == LevelOutcome::NotFound;
    if (finished && used + level.nodes <= max_nodes) {
      used += level.nodes;
      if (level.outcome == LevelOutcome::Found) return;
      continue;
    }
    // The trip: the node past the budget is counted, as is the first node of
    // every later level. Deadline trips keep their own count.
    level = LevelResult{LevelOutcome::Budget, std::nullopt,
                        std::min(level.nodes, max_nodes - used + 1)};
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      levels[j] = LevelResult{LevelOutcome::Budget, std::nullopt, 1};
    }
    return;
  }
}

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::FeasibleOnly:
      return "feasible_only";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::BudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

std::size_t max_pairs_per_reducer(const Instance& instance) {
  const Size q = instance.capacity();
  if (instance.kind() == ProblemKind::A2A) {
    const std::vector<Size> prefix = sorted_prefix(instance.sizes());
    return choose2(fit_count(prefix, q, instance.input_count()));
  }
  const std::vector<Size> x_prefix = sorted_prefix(instance.x_sizes());
  const std::vector<Size> y_prefix = sorted_prefix(instance.y_sizes());
  std::size_t best = 0;
  for (std::size_t a = 1; a <= instance.x_count() && x_prefix[a] <= q; ++a) {
    best = std::max(best, a * fit_count(y_prefix, q - x_prefix[a], instance.y_count()));
  }
  return best;
}

std::size_t lower_bound(const Instance& instance) {
  require_feasible(instance);
  const std::size_t pairs = instance.pair_count();
  if (pairs == 0) return 0;
  const std::size_t per_reducer = max_pairs_per_reducer(instance);
  return (pairs + per_reducer - 1) / per_reducer;
}

DecisionResult find_schema_within(const Instance& instance, std::size_t z,
                                  const SearchBudget& budget) {
  require_feasible(instance);
  SharedControl control;
  control.max_nodes = budget.max_nodes;
  control.deadline = Clock::now() + budget.max_time;
  const PairPotential potential(instance);
  std::atomic<std::uint64_t> counter{0};
  LevelResult level = run_level(instance, z, potential, control, counter);
  DecisionResult out;
  out.nodes_explored = level.nodes;
  switch (level.outcome) {
    case LevelOutcome::Found:
      out.outcome = DecisionOutcome::Found;
      out.schema = std::move(level.schema);
      break;
    case LevelOutcome::NotFound:
      out.outcome = DecisionOutcome::NotFound;
      break;
    default:
      out.outcome = DecisionOutcome::BudgetExhausted;
      break;
  }
  return out;
}

SolveReport solve_exact(const Instance& instance, const SearchBudget& budget,
                        const SolveOptions& options) {
  const auto start = Clock::now();
  SolveReport report;
  if (!check_feasibility(instance).feasible) {
    report.status = SolveStatus::Infeasible;
    report.elapsed = Clock::now() - start;
    return report;
  }
  report.lower_bound = lower_bound(instance);
  MappingSchema fallback = best_heuristic_schema(instance, options.heuristic);
  const std::size_t lb = report.lower_bound;
  const std::size_t ub = fallback.size();

  std::vector<LevelResult> levels(ub > lb ? ub - lb : 0);
  if (!levels.empty()) {
    SharedControl control;
    control.max_nodes = budget.max_nodes;
    control.deadline = start + budget.max_time;
    const PairPotential potential(instance);
    const unsigned threads =
        std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(levels.size())));
    // Sequential runs share one node counter. Parallel levels count
    // separately and are replayed in order against the budget afterwards.
    std::vector<std::atomic<std::uint64_t>> counters(threads == 1 ? 1 : levels.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < levels.size(); i = next++) {
        const std::size_t z = lb + i;
        if (control.best_level.load() < z) continue;
        levels[i] = run_level(instance, z, potential, control, counters[threads == 1 ? 0 : i]);
        if (levels[i].outcome == LevelOutcome::Found) {
          std::size_t seen = control.best_level.load();
          while (z < seen && !control.best_level.compare_exchange_weak(seen, z)) {
          }
        }
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
      replay_budget(levels, budget.max_nodes);
    }
  }

  std::size_t best_z = ub;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].outcome == LevelOutcome::Found) {
      best_z = lb + i;
      break;
    }
  }
  bool proven = true;
  for (std::size_t i = 0; i < levels.size() && lb + i <= best_z; ++i) {
    report.nodes_explored += levels[i].nodes;
    if (lb + i < best_z && levels[i].outcome != LevelOutcome::NotFound) proven = false;
  }
  report.schema = best_z < ub ? std::move(levels[best_z - lb].schema) : std::move(fallback);
  report.z = best_z;
  report.status = proven ? SolveStatus::Optimal : SolveStatus::BudgetExhausted;
  report.elapsed = Clock::now() - start;
  return report;
}

SolveReport solve_heuristic(const Instance& instance, const HeuristicOptions& options) {
  const auto start = Clock::now();
  SolveReport report;
  if (!check_feasibility(instance).feasible) {
    report.status = SolveStatus::Infeasible;
    report.elapsed = Clock::now() - start;
    return report;
  }
  report.lower_bound = lower_bound(instance);
  report.schema = best_heuristic_schema(instance, options);
  report.z = report.schema->size();
  report.status =
      report.z == report.lower_bound ? SolveStatus::Optimal : SolveStatus::FeasibleOnly;
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace mapsched
