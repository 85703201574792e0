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

#include <random>

#include <gtest/gtest.h>

#include "mapsched/solver.hpp"
#include "test_support.hpp"

namespace mapsched {
namespace {

TEST(FfdPackTest, HandTrace) {
  const std::vector<Size> sizes{5, 4, 3, 2, 2};
  const BinPacking p = ffd_pack(sizes, 8);
  ASSERT_EQ(p.bins.size(), 2u);
  EXPECT_EQ(p.bins[0], (std::vector<std::size_t>{0, 2}));     // 5 + 3
  EXPECT_EQ(p.bins[1], (std::vector<std::size_t>{1, 3, 4}));  // 4 + 2 + 2
  EXPECT_EQ(p.loads, (std::vector<Size>{8, 8}));
}

TEST(FfdPackTest, UnitItemsPairUp) {
  const std::vector<Size> sizes{1, 1, 1, 1};
  const BinPacking p = ffd_pack(sizes, 2);
  EXPECT_EQ(p.bins, (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}}));
}

TEST(FfdPackTest, RejectsOversizeItem) {
  const std::vector<Size> sizes{3};
  EXPECT_THROW(ffd_pack(sizes, 2), PackingError);
}

TEST(FfdPackTest, TiesKeepIndexOrder) {
  const std::vector<Size> sizes{2, 3, 2, 3};
  const BinPacking p = ffd_pack(sizes, 5);
  EXPECT_EQ(p.bins, (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}}));
}

TEST(FfdPackTest, PackingInvariants) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto sizes = testing::random_sizes(rng, static_cast<std::size_t>(trial % 30), 1, 10);
    const BinPacking p = ffd_pack(sizes, 10);
    std::vector<int> seen(sizes.size(), 0);
    for (std::size_t b = 0; b < p.bins.size(); ++b) {
      Size load = 0;
      for (std::size_t i : p.bins[b]) {
        ++seen[i];
        load += sizes[i];
      }
      ASSERT_EQ(load, p.loads[b]);
      ASSERT_LE(load, 10);
    }
    for (int s : seen) ASSERT_EQ(s, 1);
  }
}

TEST(A2APairCoverTest, SixUnitInputsCapacityFour) {
  const Instance inst = Instance::a2a(std::vector<Size>(6, 1), 4);
  const MappingSchema s = a2a_pair_cover(inst);
  EXPECT_EQ(s, MappingSchema(ProblemKind::A2A, {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}));
  EXPECT_TRUE(validate(s, inst).valid());
  EXPECT_EQ(s.size(), lower_bound(inst));
}

TEST(A2APairCoverTest, SingletonBinsGiveOneReducerPerPair) {
  const Instance inst = Instance::a2a(std::vector<Size>(4, 1), 2);
  const MappingSchema s = a2a_pair_cover(inst);
  EXPECT_EQ(s.size(), 6u);
  EXPECT_TRUE(validate(s, inst).valid());
}

TEST(A2APairCoverTest, TwoBinsMakeOneReducer) {
  const Instance inst = Instance::a2a({2, 2, 1, 1}, 6);
  const MappingSchema s = a2a_pair_cover(inst);
  EXPECT_EQ(s, MappingSchema(ProblemKind::A2A, {{0, 1, 2, 3}}));
  EXPECT_EQ(metrics(s, inst).max_load, 6);
}

TEST(A2APairCoverTest, SingleBin) {
  const Instance inst = Instance::a2a({1, 1, 1}, 7);
  EXPECT_EQ(a2a_pair_cover(inst), MappingSchema(ProblemKind::A2A, {{0, 1, 2}}));
}

TEST(A2APairCoverTest, OversizeInputIsInapplicable) {
  const Instance inst = Instance::a2a({4, 1, 1, 1}, 6);
  EXPECT_THROW(a2a_pair_cover(inst), HeuristicInapplicable);
  EXPECT_THROW(a2a_pair_cover(Instance::a2a({3, 2}, 4)), InfeasibleError);
}

TEST(A2APairCoverTest, BalancedUnitBinsGiveChooseTwo) {
  for (std::size_t group = 1; group <= 4; ++group) {
    for (std::size_t b = 1; b <= 6; ++b) {
      const Instance inst =
          Instance::a2a(std::vector<Size>(group * b, 1), static_cast<Size>(2 * group));
      const MappingSchema s = a2a_pair_cover(inst);
      ASSERT_EQ(s.size(), b == 1 ? 1 : choose2(b)) << group << "x" << b;
      ASSERT_TRUE(validate(s, inst).valid());
    }
  }
}

TEST(X2YGridCoverTest, FourByFourAtCapacityFour) {
  const Instance inst = Instance::x2y(std::vector<Size>(4, 1), std::vector<Size>(4, 1), 4);
  const MappingSchema s = x2y_grid_cover(inst);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(validate(s, inst).valid());
  EXPECT_EQ(s.size(), lower_bound(inst));
}

TEST(X2YGridCoverTest, SinglePair) {
  EXPECT_EQ(x2y_grid_cover(Instance::x2y({1}, {1}, 2)).size(), 1u);
}

TEST(X2YGridCoverTest, ThreeByThreeHandTrace) {
  const Instance inst = Instance::x2y(std::vector<Size>(3, 1), std::vector<Size>(3, 1), 4);
  const MappingSchema s = x2y_grid_cover(inst);
  // X bins {x0,x1},{x2}; Y bins {y0,y1},{y2} (flat 3,4 and 5).
  EXPECT_EQ(s, MappingSchema(ProblemKind::X2Y, {{0, 1, 3, 4}, {0, 1, 5}, {2, 3, 4}, {2, 5}}));
  const Metrics m = metrics(s, inst);
  EXPECT_EQ(m.max_load, 4);
  std::vector<Size> loads;
  for (const Reducer& r : s.reducers()) loads.push_back(reducer_load(r, inst));
  EXPECT_EQ(loads, (std::vector<Size>{4, 3, 3, 2}));
}

TEST(X2YGridCoverTest, InapplicableNamesTheSide) {
  const Instance inst = Instance::x2y({3}, {1, 1}, 4);
  try {
    x2y_grid_cover(inst);
    FAIL() << "expected HeuristicInapplicable";
  } catch (const HeuristicInapplicable& e) {
    EXPECT_EQ(e.side(), InputSide::X);
  }
  try {
    x2y_grid_cover(Instance::x2y({1}, {3}, 4));
    FAIL() << "expected HeuristicInapplicable";
  } catch (const HeuristicInapplicable& e) {
    EXPECT_EQ(e.side(), InputSide::Y);
  }
  EXPECT_NO_THROW(x2y_grid_cover(inst, 0.75));
  EXPECT_THROW(x2y_grid_cover(inst, 1.0), std::invalid_argument);
}

TEST(PruneRedundantTest, DropsStrictSubset) {
  const Instance inst = Instance::a2a(std::vector<Size>(4, 1), 3);
  const MappingSchema s(ProblemKind::A2A, {{0, 1, 2}, {0, 1}, {2, 3}, {0, 3}, {1, 3}});
  const MappingSchema pruned = prune_redundant(s, inst);
  EXPECT_EQ(pruned, MappingSchema(ProblemKind::A2A, {{0, 1, 2}, {2, 3}, {0, 3}, {1, 3}}));
}

TEST(PruneRedundantTest, TriangleUnchanged) {
  const Instance inst = Instance::a2a({1, 1, 1}, 2);
  const MappingSchema s(ProblemKind::A2A, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(prune_redundant(s, inst), s);
}

TEST(PruneRedundantTest, DuplicateRemovedHigherIndexFirst) {
  const Instance inst = Instance::a2a({1, 1}, 2);
  const MappingSchema s(ProblemKind::A2A, {{0, 1}, {0, 1}});
  EXPECT_EQ(prune_redundant(s, inst), MappingSchema(ProblemKind::A2A, {{0, 1}}));
}

TEST(PruneRedundantTest, RejectsInvalidSchema) {
  const Instance inst = Instance::a2a({1, 1, 1}, 2);
  EXPECT_THROW(prune_redundant(MappingSchema(ProblemKind::A2A, {{0, 1}}), inst), SchemaError);
}

TEST(GreedyPairCoverTest, HandlesHeavyInputs) {
  const Instance inst = Instance::a2a({4, 1, 1, 1}, 6);
  const MappingSchema s = greedy_pair_cover(inst);
  EXPECT_TRUE(validate(s, inst).valid());
}

TEST(HeuristicPropertyTest, AlwaysValidNeverBelowBoundPruneMonotone) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const Instance inst = trial % 2 ? testing::random_feasible_a2a(rng, 0, 14, 1, 6, 24)
                                    : testing::random_feasible_x2y(rng, 40, 1, 6, 24);
    std::vector<MappingSchema> outputs;
    outputs.push_back(greedy_pair_cover(inst));
    try {
      outputs.push_back(inst.kind() == ProblemKind::A2A ? a2a_pair_cover(inst)
                                                        : x2y_grid_cover(inst));
    } catch (const HeuristicInapplicable&) {
    }
    outputs.push_back(best_heuristic_schema(inst));
    const std::size_t lb = lower_bound(inst);
    for (const MappingSchema& s : outputs) {
      ASSERT_TRUE(validate(s, inst).valid()) << "trial " << trial;
      ASSERT_GE(s.size(), lb);
      const MappingSchema pruned = prune_redundant(s, inst);
      ASSERT_TRUE(validate(pruned, inst).valid());
      ASSERT_LE(metrics(pruned, inst).communication_cost, metrics(s, inst).communication_cost);
      ASSERT_EQ(prune_redundant(pruned, inst), pruned);
    }
  }
}

}  // namespace
}  // namespace mapsched
