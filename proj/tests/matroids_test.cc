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

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "submodular/generators.h"
#include "submodular/matroid.h"
#include "submodular/properties.h"

namespace submodular {
namespace {

TEST(UniformMatroidTest, SizeLimit) {
  const UniformMatroid m(5, 2);
  EXPECT_TRUE(m.IsIndependent(Subset(5, {1, 4})));
  EXPECT_FALSE(m.IsIndependent(Subset(5, {0, 1, 4})));
  EXPECT_TRUE(m.IsIndependent(Subset(5)));
  EXPECT_EQ(m.RankCeiling(), 2u);
  EXPECT_THROW(UniformMatroid(3, 0), std::invalid_argument);
  EXPECT_THROW(UniformMatroid(3, 4), std::invalid_argument);
  EXPECT_THROW(m.IsIndependent(Subset(4)), std::invalid_argument);
}

TEST(PartitionMatroidTest, BlockBudgets) {
  const PartitionMatroid m(4, {{0, 1}, {2, 3}}, {1, 1});
  EXPECT_FALSE(m.IsIndependent(Subset(4, {0, 1})));
  EXPECT_TRUE(m.IsIndependent(Subset(4, {0, 3})));
  EXPECT_TRUE(m.IsIndependent(Subset(4)));
  EXPECT_EQ(m.BlockOf(3), 1u);
}

TEST(PartitionMatroidTest, RankCeilings) {
  EXPECT_EQ(UniformMatroid(6, 3).RankCeiling(), 3u);
  EXPECT_EQ(
      PartitionMatroid(6, {{0, 1}, {2, 3, 4}, {5}}, {1, 2, 1}).RankCeiling(),
      4u);
  EXPECT_EQ(PartitionMatroid(4, {{0, 1, 2, 3}}, {4}).RankCeiling(), 4u);
}

TEST(PartitionMatroidTest, RejectsMalformedBlocks) {
  EXPECT_THROW(PartitionMatroid(4, {{0, 1}, {1, 2, 3}}, {1, 1}),
               std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(4, {{0, 1}, {2}}, {1, 1}),
               std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(4, {{0, 1}, {2, 3}}, {1}),
               std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(4, {{0, 1}, {2, 3}}, {3, 1}),
               std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(4, {{0, 1}, {}, {2, 3}}, {1, 1, 1}),
               std::invalid_argument);
}

TEST(PartitionMatroidTest, FromUniformIsSingleBlock) {
  const PartitionMatroid m =
      PartitionMatroid::FromUniform(UniformMatroid(5, 3));
  EXPECT_EQ(m.num_blocks(), 1u);
  EXPECT_EQ(m.kappa(0), 3u);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const Subset s = Subset::FromMask(5, mask);
    EXPECT_EQ(m.IsIndependent(s), s.Count() <= 3);
  }
}

TEST(VerifyMatroidAxiomsTest, UniformAndPartitionHold) {
  EXPECT_TRUE(VerifyMatroidAxioms(UniformMatroid(4, 2)).holds);
  EXPECT_TRUE(
      VerifyMatroidAxioms(PartitionMatroid(4, {{0, 1}, {2, 3}}, {1, 1})).holds);
}

TEST(VerifyMatroidAxiomsTest, AllGeneratedMatroidsUpToTen) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t kappa = 1; kappa <= n; ++kappa) {
      EXPECT_TRUE(VerifyMatroidAxioms(UniformMatroid(n, kappa)).holds);
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      EXPECT_TRUE(VerifyMatroidAxioms(RandomPartition(n, 4, 3, seed)).holds);
    }
  }
}

TEST(VerifyMatroidAxiomsTest, ExcludingOnePairIsStillAMatroid) {
  // Sets of size <= 2 other than {0, 1}: a paving matroid, so no witness.
  const PredicateIndependence m(4, [](const Subset& s) {
    return s.Count() <= 2 && !(s == Subset(4, {0, 1}));
  });
  EXPECT_TRUE(VerifyMatroidAxioms(m).holds);
}

TEST(VerifyMatroidAxiomsTest, CatchesAugmentationFailure) {
  // Singletons plus the single pair {0, 1}: {2} cannot grow from {0, 1}.
  const PredicateIndependence m(4, [](const Subset& s) {
    return s.Count() <= 1 || s == Subset(4, {0, 1});
  });
  const PropertyReport report = VerifyMatroidAxioms(m);
  ASSERT_FALSE(report.holds);
  ASSERT_TRUE(report.witness && report.witness->r);
  const Subset& larger = report.witness->s;
  const Subset& smaller = *report.witness->r;
  EXPECT_TRUE(m.IsIndependent(larger));
  EXPECT_TRUE(m.IsIndependent(smaller));
  EXPECT_GT(larger.Count(), smaller.Count());
  for (ElementId p : (larger - smaller).Elements()) {
    EXPECT_FALSE(m.IsIndependent(smaller.With(p)));
  }
}

TEST(VerifyMatroidAxiomsTest, CatchesDownwardClosureFailure) {
  const PredicateIndependence m(
      4, [](const Subset& s) { return s.Count() == 0 || s.Count() == 2; });
  const PropertyReport report = VerifyMatroidAxioms(m);
  ASSERT_FALSE(report.holds);
  ASSERT_TRUE(report.witness && report.witness->r);
  EXPECT_TRUE(m.IsIndependent(report.witness->s));
  EXPECT_FALSE(m.IsIndependent(*report.witness->r));
  EXPECT_TRUE(report.witness->r->IsSubsetOf(report.witness->s));
}

TEST(VerifyMatroidAxiomsTest, CatchesMissingEmptySet) {
  const ExplicitIndependence m(2, {Subset(2, {0})});
  const PropertyReport report = VerifyMatroidAxioms(m);
  EXPECT_FALSE(report.holds);
}

TEST(ExplicitIndependenceTest, LookupAndRankCeiling) {
  const ExplicitIndependence m(
      3, {Subset(3), Subset(3, {0}), Subset(3, {1}), Subset(3, {0, 1})});
  EXPECT_TRUE(m.IsIndependent(Subset(3, {0, 1})));
  EXPECT_FALSE(m.IsIndependent(Subset(3, {2})));
  EXPECT_EQ(m.RankCeiling(), 2u);
  EXPECT_TRUE(VerifyMatroidAxioms(m).holds);
}

TEST(VerifyMatroidAxiomsTest, RandomFamiliesAgreeWithDefinition) {
  // Independent reference: check closure and exchange over all pairs of
  // masks, on random families over 4 elements.
  std::mt19937_64 rng(99);
  int matroids = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<bool> in(16, false);
    in[0] = true;
    for (std::uint64_t mask = 1; mask < 16; ++mask) in[mask] = rng() % 3 != 0;
    bool expected = true;
    for (std::uint64_t a = 0; a < 16 && expected; ++a) {
      if (!in[a]) continue;
      for (std::uint64_t b = 0; b < 16 && expected; ++b) {
        if ((b & ~a) == 0 && !in[b]) expected = false;
        if (in[b] && __builtin_popcountll(b) < __builtin_popcountll(a)) {
          bool extends = false;
          for (std::uint64_t rest = a & ~b; rest; rest &= rest - 1) {
            extends = extends || in[b | (rest & (~rest + 1))];
          }
          expected = expected && extends;
        }
      }
    }
    const PredicateIndependence m(
        4, [&](const Subset& s) { return static_cast<bool>(in[s.Mask()]); });
    EXPECT_EQ(VerifyMatroidAxioms(m).holds, expected) << "trial " << trial;
    matroids += expected;
  }
  EXPECT_GT(matroids, 0);
}

}  // namespace
}  // namespace submodular
