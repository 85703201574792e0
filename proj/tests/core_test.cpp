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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mapsched {
namespace {

TEST(InstanceTest, SmallestA2AHasOnePair) {
  const Instance inst = Instance::a2a({1, 1}, 2);
  EXPECT_EQ(inst.kind(), ProblemKind::A2A);
  EXPECT_EQ(inst.pair_count(), 1u);
  EXPECT_EQ(required_pairs(inst), (std::vector<PairId>{{0, 1}}));
}

TEST(InstanceTest, RejectsNonpositiveCapacity) {
  EXPECT_THROW(Instance::a2a({1, 1}, 0), InstanceError);
  EXPECT_THROW(Instance::x2y({1}, {1}, -3), InstanceError);
}

TEST(InstanceTest, RejectsNonpositiveSizes) {
  EXPECT_THROW(Instance::a2a({1, 0}, 4), InstanceError);
  EXPECT_THROW(Instance::x2y({1}, {-1}, 4), InstanceError);
}

TEST(InstanceTest, RejectsListsInconsistentWithKind) {
  EXPECT_THROW(Instance::make(ProblemKind::A2A, {1}, {1}, {}, 3), InstanceError);
  EXPECT_THROW(Instance::make(ProblemKind::X2Y, {1}, {1}, {1}, 3), InstanceError);
}

TEST(InstanceTest, EmptyListsAreLegal) {
  EXPECT_EQ(Instance::a2a({}, 1).pair_count(), 0u);
  EXPECT_EQ(Instance::x2y({}, {3}, 5).pair_count(), 0u);
}

TEST(InstanceTest, SingleCrossPair) {
  const Instance inst = Instance::x2y({1}, {2}, 3);
  EXPECT_EQ(required_pairs(inst), (std::vector<PairId>{{0, 0}}));
  EXPECT_EQ(inst.members({0, 0}), (std::pair<InputIndex, InputIndex>{0, 1}));
  EXPECT_EQ(inst.size_of(1), 2);
}

TEST(InstanceTest, DuplicateSizesAreDistinctInputs) {
  const Instance inst = Instance::a2a({2, 2, 2}, 4);
  EXPECT_EQ(inst.pair_count(), 3u);
}

TEST(RequiredPairsTest, CountsAndOrder) {
  EXPECT_EQ(required_pairs(Instance::a2a({1, 1, 1, 1}, 2)).size(), 6u);
  EXPECT_EQ(required_pairs(Instance::x2y({1, 1}, {1, 1, 1}, 2)).size(), 6u);
  EXPECT_TRUE(required_pairs(Instance::a2a({1}, 2)).empty());
  const auto pairs = required_pairs(Instance::a2a({1, 1, 1}, 2));
  EXPECT_EQ(pairs, (std::vector<PairId>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(RequiredPairsTest, CountMatchesClosedFormUpToFifty) {
  for (std::size_t m = 0; m <= 50; ++m) {
    const Instance a2a = Instance::a2a(std::vector<Size>(m, 1), 2);
    const auto pairs = required_pairs(a2a);
    ASSERT_EQ(pairs.size(), m * (m > 0 ? m - 1 : 0) / 2) << m;
    const std::set<PairId> unique(pairs.begin(), pairs.end());
    ASSERT_EQ(unique.size(), pairs.size());
    ASSERT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      ASSERT_LT(pairs[k].first, pairs[k].second);
      ASSERT_EQ(a2a.pair_rank(pairs[k]), k);
    }
  }
  for (std::size_t m = 1; m <= 50; m += 7) {
    for (std::size_t n = 1; n <= 50; n += 6) {
      const Instance x2y = Instance::x2y(std::vector<Size>(m, 1), std::vector<Size>(n, 1), 2);
      const auto pairs = required_pairs(x2y);
      ASSERT_EQ(pairs.size(), m * n);
      for (std::size_t k = 0; k < pairs.size(); ++k) ASSERT_EQ(x2y.pair_rank(pairs[k]), k);
    }
  }
}

TEST(PairOfTest, X2YOnlyPairsAcrossSides) {
  const Instance inst = Instance::x2y({1, 1}, {1, 1}, 2);
  EXPECT_FALSE(inst.pair_of(0, 1).has_value());
  EXPECT_FALSE(inst.pair_of(2, 3).has_value());
  EXPECT_EQ(*inst.pair_of(3, 0), (PairId{0, 1}));
  EXPECT_FALSE(inst.pair_of(1, 1).has_value());
}

TEST(FeasibilityTest, Examples) {
  const FeasibilityReport bad = check_feasibility(Instance::a2a({3, 2}, 4));
  EXPECT_FALSE(bad.feasible);
  EXPECT_EQ(bad.witness, (PairId{0, 1}));

  const FeasibilityReport ok = check_feasibility(Instance::a2a({1, 1, 1}, 2));
  EXPECT_TRUE(ok.feasible);
  EXPECT_FALSE(ok.witness.has_value());

  const FeasibilityReport cross = check_feasibility(Instance::x2y({2, 2}, {3}, 4));
  EXPECT_FALSE(cross.feasible);
  EXPECT_EQ(cross.witness, (PairId{0, 0}));
}

TEST(FeasibilityTest, SameSideX2YPairsAreNotRequired) {
  // x0 + x1 exceeds q but they never need to meet.
  EXPECT_TRUE(check_feasibility(Instance::x2y({3, 3}, {1}, 4)).feasible);
}

TEST(FeasibilityTest, MonotoneInCapacity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto sizes = testing::random_sizes(rng, 1 + trial % 8, 1, 9);
    bool was_feasible = false;
    for (Size q = 1; q <= 20; ++q) {
      const bool feasible = check_feasibility(Instance::a2a(sizes, q)).feasible;
      if (was_feasible) ASSERT_TRUE(feasible);
      was_feasible = feasible;
    }
  }
}

}  // namespace
}  // namespace mapsched
