// Copyright 2026 The Authors.
//
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

#include "submodular/functions.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <vector>

#include "submodular/bruteforce.h"
#include "submodular/generators.h"
#include "submodular/properties.h"
#include "test_util.h"

namespace submodular {
namespace {

ExemplarInstance OneDatum(std::vector<Point> candidates, Point datum,
                          Point phantom) {
  return {
      .candidates = std::move(candidates), .data = {datum}, .phantom = phantom};
}

TEST(ExemplarLossTest, SingleCandidateDistance) {
  const ExemplarInstance inst = OneDatum({{0, 0}}, {3, 4}, {100, 100});
  EXPECT_DOUBLE_EQ(ExemplarLoss(inst, Subset(1, {0})), 5.0);
  EXPECT_DOUBLE_EQ(
      ExemplarLoss(inst, Subset(1, {0}), ExemplarLossMode::kChosenAverage),
      5.0);
}

TEST(ExemplarLossTest, ChosenAverageOfTwoDistances) {
  // Distances 5 and 13 from the datum at the origin.
  const ExemplarInstance inst = OneDatum({{3, 4}, {5, 12}}, {0, 0}, {99, 99});
  EXPECT_DOUBLE_EQ(
      ExemplarLoss(inst, Subset(2, {0, 1}), ExemplarLossMode::kChosenAverage),
      9.0);
  // The medoid form keeps only the nearer exemplar.
  EXPECT_DOUBLE_EQ(ExemplarLoss(inst, Subset(2, {0, 1})), 5.0);
}

TEST(ExemplarLossTest, MatchesDirectRecomputation) {
  const ExemplarInstance inst = RandomExemplar(5, 17, 5);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t mask = 1 + rng() % 31;
    double medoid = 0.0;
    for (const Point& d : inst.data) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t p = 0; p < 5; ++p) {
        if ((mask >> p) & 1u) {
          best = std::min(best,
                          std::sqrt(std::pow(inst.candidates[p].x - d.x, 2) +
                                    std::pow(inst.candidates[p].y - d.y, 2)));
        }
      }
      medoid += best;
    }
    EXPECT_NEAR(ExemplarLoss(inst, Subset::FromMask(5, mask)), medoid, 1e-9);
  }
}

TEST(ExemplarLossTest, EmptySetIsRejected) {
  const ExemplarInstance inst = RandomExemplar(3, 1);
  EXPECT_THROW(ExemplarLoss(inst, Subset(3)), std::invalid_argument);
}

TEST(ExemplarUtilityTest, Examples) {
  const ExemplarInstance inst = OneDatum({{1, 0}}, {0, 0}, {100, 0});
  EXPECT_DOUBLE_EQ(ExemplarUtility(inst, Subset(1)), 0.0);
  EXPECT_DOUBLE_EQ(ExemplarUtility(inst, Subset(1, {0})), 99.0);
}

TEST(ExemplarUtilityTest, NormalMonotoneSubmodular) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ExemplarOracle f(RandomExemplar(7, seed));
    EXPECT_TRUE(CheckNormal(f).holds);
    EXPECT_TRUE(CheckMonotone(f).holds);
    EXPECT_TRUE(CheckSubmodular(f).holds);
  }
}

TEST(ExemplarUtilityTest, CustomDissimilarity) {
  ExemplarInstance inst = OneDatum({{1, 0}, {0, 2}}, {0, 0}, {10, 10});
  inst.dist = [](const Point& a, const Point& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
  };
  const ExemplarOracle f(inst);
  EXPECT_DOUBLE_EQ(f.Evaluate(Subset(2, {1})), 20.0 - 2.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(Subset(2, {0, 1})), 20.0 - 1.0);
}

TEST(CoverageTest, Examples) {
  // Items a, b, c are 0, 1, 2.
  const CoverageInstance overlapping{{1, 1, 1}, {{0, 1}, {1, 2}}};
  EXPECT_DOUBLE_EQ(CoverageValue(overlapping, Subset(2)), 0.0);
  EXPECT_DOUBLE_EQ(CoverageValue(overlapping, Subset(2, {0, 1})), 3.0);
  const CoverageInstance disjoint{{2, 3, 5}, {{0}, {1}, {2}}};
  EXPECT_DOUBLE_EQ(CoverageValue(disjoint, Subset(3, {0, 2})), 7.0);
  EXPECT_DOUBLE_EQ(CoverageValue(disjoint, Subset::Full(3)), 10.0);
}

TEST(CoverageTest, OracleMatchesSetUnion) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CoverageInstance inst = RandomCoverage(8, seed, 70);
    const CoverageOracle f(inst);
    for (std::uint64_t mask = 0; mask < 256; mask += 7) {
      EXPECT_DOUBLE_EQ(f.Evaluate(Subset::FromMask(8, mask)),
                       testing::NaiveCoverage(inst, mask));
    }
  }
}

// Rank of an integer matrix by exact fraction-free elimination.
int IntegerRank(std::vector<std::vector<long long>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size());
       ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const long long a = rows[rank][c];
      const long long b = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = a * rows[r][k] - b * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

TEST(RankTest, EmptyMeasurementGivesConservationRank) {
  const RankInstance inst =
      TrafficRankInstance(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}, {1, 2});
  // Node 1: +link0 -link1 -link3; node 2: +link1 -link2.
  EXPECT_DOUBLE_EQ(RankValue(inst, Subset(4)),
                   IntegerRank({{1, -1, 0, -1}, {0, 1, -1, 0}}));
  EXPECT_DOUBLE_EQ(RankOracle(inst).Evaluate(Subset(4)), 0.0);
}

TEST(RankTest, DependentRowLeavesRankUnchanged) {
  RankInstance inst;
  inst.num_links = 3;
  inst.base_rows = {{1, 1, 0}};
  inst.measurement_rows = {{2, 2, 0}, {0, 0, 1}};
  EXPECT_DOUBLE_EQ(RankValue(inst, Subset(2, {0})), 1.0);
  EXPECT_DOUBLE_EQ(RankValue(inst, Subset(2, {1})), 2.0);
}

TEST(RankTest, PathNetworkFullyIdentified) {
  const RankInstance inst = TrafficRankInstance(3, {{0, 1}, {1, 2}}, {1});
  const int expected = IntegerRank({{1, -1}, {1, 0}, {0, 1}});
  EXPECT_EQ(expected, 2);
  EXPECT_DOUBLE_EQ(RankValue(inst, Subset::Full(2)), expected);
}

TEST(RankTest, RandomInstancesAreSubmodular) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const RankOracle f(RandomRank(9, seed));
    EXPECT_TRUE(CheckNormal(f).holds);
    EXPECT_TRUE(CheckMonotone(f).holds);
    EXPECT_TRUE(CheckSubmodular(f).holds);
  }
}

TEST(RankTest, MatrixRankHandlesScaledRows) {
  EXPECT_EQ(MatrixRank({{1e-9, 2e-9}, {2e-9, 4e-9}}), 1u);
  EXPECT_EQ(MatrixRank({{1, 0}, {0, 1}, {1, 1}}), 2u);
  EXPECT_EQ(MatrixRank({}), 0u);
}

TEST(ModularTest, SumOfWeights) {
  const ModularOracle f({{1.5, 2.0, 0.0}});
  EXPECT_DOUBLE_EQ(f.Evaluate(Subset(3, {0, 1})), 3.5);
  EXPECT_EQ(f.curvature_hint(), 0.0);
}

TEST(WelfareTest, SingleAgentIsRelabeling) {
  auto local = std::make_shared<ModularOracle>(ModularInstance{{3, 1, 4}});
  const WelfareLift lift = LiftWelfare({local}, 3);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const Subset items = Subset::FromMask(3, mask);
    Subset pairs(3);
    items.ForEach([&](ElementId i) { pairs.Insert(lift.Index(i, 0)); });
    EXPECT_DOUBLE_EQ(lift.oracle->Evaluate(pairs), local->Evaluate(items));
  }
}

TEST(WelfareTest, IdenticalAgentsAreSymmetric) {
  auto local = std::make_shared<CoverageOracle>(RandomCoverage(3, 8));
  const WelfareLift lift = LiftWelfare({local, local}, 3);
  for (std::size_t item = 0; item < 3; ++item) {
    EXPECT_DOUBLE_EQ(lift.oracle->Evaluate(Subset(6, {lift.Index(item, 0)})),
                     lift.oracle->Evaluate(Subset(6, {lift.Index(item, 1)})));
  }
}

TEST(WelfareTest, OptimumEqualsBestAllocation) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t items = 4;
    std::vector<CoverageInstance> locals = {RandomCoverage(items, seed),
                                            RandomCoverage(items, seed + 50)};
    const WelfareLift lift =
        LiftWelfare({std::make_shared<CoverageOracle>(locals[0]),
                     std::make_shared<CoverageOracle>(locals[1])},
                    items);
    // Each item goes to agent 0, agent 1, or nobody.
    double best = 0.0;
    for (int code = 0; code < 81; ++code) {
      std::uint64_t bundle[2] = {0, 0};
      int rest = code;
      for (std::size_t i = 0; i < items; ++i, rest /= 3) {
        if (rest % 3 < 2) bundle[rest % 3] |= std::uint64_t{1} << i;
      }
      best = std::max(best, testing::NaiveCoverage(locals[0], bundle[0]) +
                                testing::NaiveCoverage(locals[1], bundle[1]));
    }
    EXPECT_DOUBLE_EQ(BruteForceOpt(*lift.oracle, lift.matroid).value, best);
    EXPECT_TRUE(CheckSubmodular(*lift.oracle).holds);
  }
}

TEST(HarvestingTest, AgentsOwnDisjointBlocks) {
  HarvestingInstance inst;
  inst.data = {{0, 0}, {10, 0}, {0, 10}};
  inst.phantom = {200, 200};
  // Both agents may visit (0, 0); those are distinct ground elements.
  inst.agent_candidates = {{{0, 0}, {5, 5}}, {{0, 0}, {10, 0}, {0, 10}}};
  inst.kappas = {1, 2};
  const HarvestingProblem problem = BuildHarvestingProblem(inst);
  EXPECT_EQ(problem.exemplar.candidates.size(), 5u);
  EXPECT_EQ(problem.matroid.num_blocks(), 2u);
  EXPECT_EQ(problem.matroid.block(0), (std::vector<ElementId>{0, 1}));
  EXPECT_EQ(problem.matroid.block(1), (std::vector<ElementId>{2, 3, 4}));
  EXPECT_EQ(problem.matroid.RankCeiling(), 3u);
  const ExemplarOracle f(problem.exemplar);
  EXPECT_TRUE(CheckSubmodular(f).holds);
}

}  // namespace
}  // namespace submodular
