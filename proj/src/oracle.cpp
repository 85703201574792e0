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

#include "mapsched/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <vector>

namespace mapsched {

namespace {

constexpr std::size_t kMaxInputs = 20;
constexpr std::size_t kMaxPairs = 64;

struct Candidate {
  std::uint32_t members = 0;  // bit i set = flat input i hosted
  std::uint64_t hosts = 0;    // bit k set = pair of rank k hosted
};

class Enumerator {
 public:
  Enumerator(const std::vector<Candidate>& pool, std::uint64_t full)
      : pool_(pool), full_(full) {
    for (const Candidate& c : pool_) {
      widest_ = std::max(widest_, std::popcount(c.hosts));
    }
  }

  bool search(std::size_t z) {
    chosen_.clear();
    return pick(0, z, 0);
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  std::uint64_t explored() const { return explored_; }

 private:
  bool pick(std::size_t start, std::size_t remaining, std::uint64_t covered) {
    ++explored_;
    if (covered == full_) return true;
    if (remaining == 0) return false;
    const int missing = std::popcount(full_ & ~covered);
    if (static_cast<long long>(missing) >
        static_cast<long long>(remaining) * widest_) {
      return false;
    }
    for (std::size_t c = start; c + remaining <= pool_.size(); ++c) {
      chosen_.push_back(c);
      if (pick(c + 1, remaining - 1, covered | pool_[c].hosts)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<Candidate>& pool_;
  std::uint64_t full_;
  int widest_ = 0;
  std::vector<std::size_t> chosen_;
  std::uint64_t explored_ = 0;
};

std::vector<Candidate> maximal_pool(const Instance& instance) {
  const std::size_t n = instance.input_count();
  const Size q = instance.capacity();
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<Size> load(subsets, 0);
  std::map<std::uint64_t, std::uint32_t> by_hosts;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    load[s] = load[s & (s - 1)] + instance.size_of(static_cast<std::size_t>(low));
    if (load[s] > q) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!(s >> i & 1U) && load[s] + instance.size_of(i) <= q) maximal = false;
    }
    if (!maximal) continue;
    std::uint64_t hosts = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(s >> a & 1U)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!(s >> b & 1U)) continue;
        if (auto pair = instance.pair_of(a, b)) {
          hosts |= std::uint64_t{1} << instance.pair_rank(*pair);
        }
      }
    }
    if (hosts == 0) continue;
    by_hosts.emplace(hosts, s);  // keeps the smallest member mask per pair set
  }

  std::vector<Candidate> pool;
  for (const auto& [hosts, members] : by_hosts) {
    bool dominated = false;
    for (const auto& [other, unused] : by_hosts) {
      if (other != hosts && (hosts & ~other) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) pool.push_back({members, hosts});
  }
  std::sort(pool.begin(), pool.end(),
            [](const Candidate& a, const Candidate& b) { return a.members < b.members; });
  return pool;
}

}  // namespace

OracleResult oracle_min_z(const Instance& instance, OracleLimit limit) {
  if (!check_feasibility(instance).feasible) {
    throw InfeasibleError("oracle: instance is infeasible");
  }
  if (instance.kind() == ProblemKind::A2A &&
      instance.input_count() > limit.max_a2a_inputs) {
    throw OracleError("oracle: " + std::to_string(instance.input_count()) +
                      " inputs exceed the limit of " +
                      std::to_string(limit.max_a2a_inputs));
  }
  if (instance.kind() == ProblemKind::X2Y && instance.pair_count() > limit.max_x2y_pairs) {
    throw OracleError("oracle: " + std::to_string(instance.pair_count()) +
                      " required pairs exceed the limit of " +
                      std::to_string(limit.max_x2y_pairs));
  }
  if (instance.pair_count() > kMaxPairs || instance.input_count() > kMaxInputs) {
    throw OracleError("oracle: instance too large for exhaustive enumeration");
  }

  OracleResult result;
  result.witness = MappingSchema(instance.kind());
  const std::size_t pairs = instance.pair_count();
  if (pairs == 0) return result;

  const std::vector<Candidate> pool = maximal_pool(instance);
  const std::uint64_t full =
      pairs == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pairs) - 1;
  Enumerator enumerator(pool, full);
  for (std::size_t z = 1; z <= pool.size(); ++z) {
    if (!enumerator.search(z)) continue;
    result.min_z = z;
    for (std::size_t c : enumerator.chosen()) {
      Reducer members;
      for (std::size_t i = 0; i < instance.input_count(); ++i) {
        if (pool[c].members >> i & 1U) members.push_back(i);
      }
      result.witness.add_reducer(std::move(members));
    }
    result.explored = enumerator.explored();
    return result;
  }
  // Unreachable for feasible instances: every required pair fits some
  // maximal reducer, so the whole pool covers everything.
  throw OracleError("oracle: pool does not cover all pairs");
}

}  // namespace mapsched
