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

#include "mapsched/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "mapsched/shuffle.hpp"

namespace mapsched {

namespace {

std::vector<long long> parse_numbers(std::string_view text, std::size_t expected,
                                     std::string_view what) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    long long value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || token.empty()) {
      throw GenSpecError("bad number '" + std::string(token) + "' in " + std::string(what));
    }
    out.push_back(value);
    pos = comma + 1;
  }
  if (out.size() != expected) {
    throw GenSpecError(std::string(what) + " expects " + std::to_string(expected) +
                       " comma-separated values");
  }
  return out;
}

void check(const SizeDistribution& dist, std::size_t side_count) {
  if (const auto* c = std::get_if<ConstantSizes>(&dist)) {
    if (c->size <= 0) throw GenSpecError("constant size must be positive");
  } else if (const auto* u = std::get_if<UniformSizes>(&dist)) {
    if (u->lo <= 0) throw GenSpecError("uniform lower bound must be positive");
    if (u->lo > u->hi) throw GenSpecError("uniform range requires lo <= hi");
  } else {
    const auto& s = std::get<SkewedSizes>(dist);
    if (s.base <= 0 || s.multiplier <= 0 || s.heavy_hitters == 0) {
      throw GenSpecError("skewed parameters must be positive");
    }
    if (s.heavy_hitters > side_count) {
      throw GenSpecError("more heavy hitters than inputs on a side");
    }
  }
}

std::vector<Size> draw_sizes(const SizeDistribution& dist, std::size_t count,
                             std::mt19937_64& rng) {
  std::vector<Size> sizes(count, 0);
  if (const auto* c = std::get_if<ConstantSizes>(&dist)) {
    std::fill(sizes.begin(), sizes.end(), c->size);
  } else if (const auto* u = std::get_if<UniformSizes>(&dist)) {
    std::uniform_int_distribution<Size> pick(u->lo, u->hi);
    for (Size& s : sizes) s = pick(rng);
  } else {
    const auto& skew = std::get<SkewedSizes>(dist);
    std::fill(sizes.begin(), sizes.end(), skew.base);
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t h = 0; h < skew.heavy_hitters; ++h) {
      sizes[order[h]] = skew.base * skew.multiplier;
    }
  }
  return sizes;
}

TradeoffPoint run_point(const Instance& base, Size q, SweepMethod method,
                        const SweepOptions& options) {
  TradeoffPoint point;
  point.q = q;
  point.method = method;
  const Instance instance = with_capacity(base, q);
  if (!check_feasibility(instance).feasible) {
    point.status = PointStatus::Infeasible;
    return point;
  }

  MappingSchema schema(instance.kind());
  switch (method) {
    case SweepMethod::Exact:
    case SweepMethod::Heuristic: {
      const SolveReport report = method == SweepMethod::Exact
                                     ? solve_exact(instance, options.budget,
                                                   SolveOptions{1, options.heuristic})
                                     : solve_heuristic(instance, options.heuristic);
      schema = *report.schema;
      point.status = report.status == SolveStatus::Optimal        ? PointStatus::Optimal
                     : report.status == SolveStatus::FeasibleOnly ? PointStatus::FeasibleOnly
                                                                  : PointStatus::BudgetExhausted;
      break;
    }
    case SweepMethod::Oracle:
      try {
        schema = oracle_min_z(instance, options.oracle_limit).witness;
      } catch (const OracleError&) {
        point.status = PointStatus::Skipped;
        return point;
      }
      point.status = PointStatus::Optimal;
      break;
  }
  point.z = schema.size();
  point.communication_cost = simulate(schema, instance).bytes_shipped;
  return point;
}

}  // namespace

SizeDistribution parse_distribution(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw GenSpecError("distribution must look like name:params, got '" + std::string(text) +
                       "'");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view params = text.substr(colon + 1);
  if (name == "constant") {
    return ConstantSizes{parse_numbers(params, 1, "constant")[0]};
  }
  if (name == "uniform") {
    const auto v = parse_numbers(params, 2, "uniform");
    return UniformSizes{v[0], v[1]};
  }
  if (name == "skewed") {
    const auto v = parse_numbers(params, 3, "skewed");
    if (v[1] < 0) throw GenSpecError("skewed heavy-hitter count must be positive");
    return SkewedSizes{v[0], static_cast<std::size_t>(v[1]), v[2]};
  }
  throw GenSpecError("unknown distribution '" + std::string(name) + "'");
}

std::string to_string(const SizeDistribution& dist) {
  std::ostringstream os;
  if (const auto* c = std::get_if<ConstantSizes>(&dist)) {
    os << "constant:" << c->size;
  } else if (const auto* u = std::get_if<UniformSizes>(&dist)) {
    os << "uniform:" << u->lo << "," << u->hi;
  } else {
    const auto& s = std::get<SkewedSizes>(dist);
    os << "skewed:" << s.base << "," << s.heavy_hitters << "," << s.multiplier;
  }
  return os.str();
}

bool needs_seed(const SizeDistribution& dist) {
  return !std::holds_alternative<ConstantSizes>(dist);
}

Instance generate(const GenSpec& spec) {
  if (spec.m == 0) throw GenSpecError("m must be positive");
  if (spec.capacity <= 0) throw GenSpecError("capacity must be positive");
  std::mt19937_64 rng(spec.seed);
  if (spec.kind == ProblemKind::A2A) {
    check(spec.distribution, spec.m);
    return Instance::a2a(draw_sizes(spec.distribution, spec.m, rng), spec.capacity);
  }
  if (spec.n == 0) throw GenSpecError("n must be positive for x2y");
  check(spec.distribution, std::min(spec.m, spec.n));
  std::vector<Size> xs = draw_sizes(spec.distribution, spec.m, rng);
  std::vector<Size> ys = draw_sizes(spec.distribution, spec.n, rng);
  return Instance::x2y(std::move(xs), std::move(ys), spec.capacity);
}

Instance with_capacity(const Instance& instance, Size capacity) {
  auto copy = [](std::span<const Size> s) { return std::vector<Size>(s.begin(), s.end()); };
  return Instance::make(instance.kind(), copy(instance.sizes()), copy(instance.x_sizes()),
                        copy(instance.y_sizes()), capacity);
}

std::string_view to_string(SweepMethod method) {
  switch (method) {
    case SweepMethod::Exact:
      return "exact";
    case SweepMethod::Heuristic:
      return "heuristic";
    case SweepMethod::Oracle:
      return "oracle";
  }
  return "unknown";
}

SweepMethod parse_sweep_method(std::string_view text) {
  if (text == "exact") return SweepMethod::Exact;
  if (text == "heuristic") return SweepMethod::Heuristic;
  if (text == "oracle") return SweepMethod::Oracle;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::Optimal:
      return "optimal";
    case PointStatus::FeasibleOnly:
      return "feasible_only";
    case PointStatus::BudgetExhausted:
      return "budget_exhausted";
    case PointStatus::Infeasible:
      return "infeasible";
    case PointStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

TradeoffCurve sweep(const Instance& instance, std::vector<Size> q_list, SweepMethod method,
                    const SweepOptions& options) {
  std::sort(q_list.begin(), q_list.end());
  q_list.erase(std::unique(q_list.begin(), q_list.end()), q_list.end());
  if (!q_list.empty() && q_list.front() <= 0) {
    throw std::invalid_argument("sweep capacities must be positive");
  }

  TradeoffCurve curve;
  curve.points.resize(q_list.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < q_list.size(); i = next++) {
      curve.points[i] = run_point(instance, q_list[i], method, options);
    }
  };
  const unsigned threads = std::max(
      1U, std::min<unsigned>(options.threads, static_cast<unsigned>(q_list.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return curve;
}

std::string to_csv(const TradeoffCurve& curve) {
  std::ostringstream os;
  os << "q,z,cost,method,status\n";
  for (const TradeoffPoint& p : curve.points) {
    os << p.q << ',';
    if (p.z) os << *p.z;
    os << ',';
    if (p.communication_cost) os << *p.communication_cost;
    os << ',' << to_string(p.method) << ',' << to_string(p.status) << '\n';
  }
  return os.str();
}

}  // namespace mapsched
