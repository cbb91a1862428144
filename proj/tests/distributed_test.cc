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

#include "submodular/distributed.h"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "submodular/bruteforce.h"
#include "submodular/functions.h"
#include "submodular/generators.h"
#include "submodular/greedy.h"
#include "test_util.h"

namespace submodular {
namespace {

// Partition matroid with one block of `size` elements per agent.
PartitionMatroid AgentBlocks(std::size_t agents, std::size_t size,
                             std::size_t kappa = 1) {
  std::vector<std::vector<ElementId>> blocks(agents);
  for (std::size_t a = 0; a < agents; ++a) {
    for (std::size_t j = 0; j < size; ++j) blocks[a].push_back(a * size + j);
  }
  return PartitionMatroid(agents * size, blocks,
                          std::vector<std::size_t>(agents, kappa));
}

CommGraph RandomGraph(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<std::pair<AgentId, AgentId>> edges;
  std::bernoulli_distribution coin(density);
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return CommGraph(n, edges);
}

// Shortest covering walk length by breadth-first search over
// (visited set, position); independent of the library's search.
std::size_t ShortestCoverLength(const CommGraph& g) {
  const std::size_t n = g.num_agents();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::vector<int>> dist(full + 1, std::vector<int>(n, -1));
  std::vector<std::pair<std::size_t, AgentId>> frontier;
  for (AgentId a = 0; a < n; ++a) {
    dist[std::size_t{1} << a][a] = 1;
    frontier.emplace_back(std::size_t{1} << a, a);
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto [mask, a] = frontier[head];
    if (mask == full) return dist[mask][a];
    for (AgentId b : g.Neighbors(a)) {
      const std::size_t next = mask | (std::size_t{1} << b);
      if (dist[next][b] < 0) {
        dist[next][b] = dist[mask][a] + 1;
        frontier.emplace_back(next, b);
      }
    }
  }
  return 0;
}

TEST(CommGraphTest, Construction) {
  const CommGraph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.Edges().size(), 2u);
  EXPECT_TRUE(g.Adjacent(2, 1));
  EXPECT_FALSE(g.Adjacent(0, 2));
  EXPECT_THROW(CommGraph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(CommGraph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_FALSE(CommGraph(3, {{0, 1}}).IsConnected());
  EXPECT_TRUE(CommGraph::Star(4).IsConnected());
}

TEST(FindMessageSequenceTest, Examples) {
  const MessageSchedule path = FindMessageSequence(CommGraph::Path(3));
  EXPECT_EQ(path.walk, (std::vector<AgentId>{0, 1, 2}));
  EXPECT_TRUE(path.hamiltonian);
  EXPECT_EQ(path.revisits(), 0u);

  const MessageSchedule star = FindMessageSequence(CommGraph::Star(4));
  EXPECT_EQ(star.walk, (std::vector<AgentId>{1, 0, 2, 0, 3}));
  EXPECT_FALSE(star.hamiltonian);
  EXPECT_EQ(star.revisits(), 1u);
  EXPECT_EQ(star.FirstVisitOrder(), (std::vector<AgentId>{1, 0, 2, 3}));
  EXPECT_EQ(star.ToString(), "(1,0,2,0,3)");

  const MessageSchedule complete = FindMessageSequence(CommGraph::Complete(4));
  EXPECT_EQ(complete.walk, (std::vector<AgentId>{0, 1, 2, 3}));
  EXPECT_TRUE(complete.optimal);
}

TEST(FindMessageSequenceTest, DisconnectedGraphIsRejected) {
  EXPECT_THROW(FindMessageSequence(CommGraph(4, {{0, 1}, {2, 3}})),
               std::invalid_argument);
}

TEST(FindMessageSequenceTest, ShortestAndValidOnRandomGraphs) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const CommGraph g = RandomGraph(n, 0.45, rng);
    if (!g.IsConnected()) continue;
    ++checked;
    const MessageSchedule s = FindMessageSequence(g);
    EXPECT_NO_THROW(ValidateSchedule(g, s.walk));
    EXPECT_EQ(s.walk.size(), ShortestCoverLength(g));
    EXPECT_EQ(s.hamiltonian, HasHamiltonianPathBruteForce(g));
    EXPECT_EQ(s.hamiltonian, s.revisits() == 0);
  }
  EXPECT_GT(checked, 100);
}

TEST(FindMessageSequenceTest, LargeGraphFallsBackToHeuristic) {
  const MessageSchedule s = FindMessageSequence(CommGraph::Path(14));
  EXPECT_FALSE(s.optimal);
  EXPECT_NO_THROW(ValidateSchedule(CommGraph::Path(14), s.walk));
}

TEST(ValidateScheduleTest, RejectsBadWalks) {
  const CommGraph g = CommGraph::Path(3);
  EXPECT_THROW(ValidateSchedule(g, {0, 2, 1}), std::invalid_argument);
  EXPECT_THROW(ValidateSchedule(g, {0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(ValidateSchedule(g, {2, 1, 0}));
}

TEST(RunDistributedTest, NoDropsMatchesCentralizedOrder) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t agents = 2 + seed % 3;
    const PartitionMatroid m = AgentBlocks(agents, 3, 1 + seed % 2);
    const auto f = testing::RandomFamilyOracle(static_cast<int>(seed),
                                               m.ground_size(), seed);
    CommGraph g = RandomGraph(agents, 0.6, rng);
    if (!g.IsConnected()) g = CommGraph::Path(agents);
    const MessageSchedule s = FindMessageSequence(g);
    const DistributedResult run =
        RunDistributedSG(*f, m, s.walk, DropModel::None());
    const GreedyTrace central =
        SequentialGreedyPartition(*f, m, s.FirstVisitOrder());
    EXPECT_EQ(run.set, central.final_set);
    EXPECT_NEAR(run.trace.final_value, central.final_value, 1e-12);
    EXPECT_EQ(run.decision_order, s.FirstVisitOrder());
    EXPECT_EQ(run.info_graph.num_edges(), agents * (agents - 1) / 2);
    EXPECT_EQ(CliqueNumber(run.info_graph), agents);
  }
}

TEST(RunDistributedTest, AllDroppedMeansIsolatedGreedy) {
  const PartitionMatroid m = AgentBlocks(3, 2);
  const CoverageOracle f(RandomCoverage(6, 4));
  const DistributedResult run =
      RunDistributedSG(f, m, {0, 1, 2}, DropModel::FailedHops({0, 1}));
  EXPECT_EQ(run.info_graph.num_edges(), 0u);
  EXPECT_EQ(run.dropped_hops, 2u);
  EXPECT_EQ(CliqueNumber(run.info_graph), 1u);
  for (AgentId a = 0; a < 3; ++a) {
    EXPECT_TRUE(run.conditioning[a].Empty());
    // Each agent's pick is its best singleton.
    const ElementId first = m.block(a)[0];
    const ElementId second = m.block(a)[1];
    const ElementId expected =
        f.Evaluate(Subset(6, {second})) > f.Evaluate(Subset(6, {first}))
            ? second
            : first;
    EXPECT_EQ(run.agent_picks[a], Subset(6, {expected}));
  }
}

TEST(RunDistributedTest, SingleDropOnPath) {
  const PartitionMatroid m = AgentBlocks(3, 2);
  const CoverageOracle f(RandomCoverage(6, 8));
  const DistributedResult run =
      RunDistributedSG(f, m, {0, 1, 2}, DropModel::FailedHops({1}));
  EXPECT_TRUE(run.info_graph.HasEdge(0, 1));
  EXPECT_FALSE(run.info_graph.HasEdge(0, 2));
  EXPECT_FALSE(run.info_graph.HasEdge(1, 2));
  EXPECT_EQ(CliqueNumber(run.info_graph), 2u);
}

TEST(RunDistributedTest, DropLosesOnlyTheMessageInFlight) {
  // Star walk (1,0,2,0,3): dropping hop 1 (0 -> 2) leaves 2 uninformed, but
  // hop 3 (0 -> 3) still carries what 0 learned from 1 and, via hop 2, from 2.
  const PartitionMatroid m = AgentBlocks(4, 2);
  const CoverageOracle f(RandomCoverage(8, 3));
  const DistributedResult run =
      RunDistributedSG(f, m, {1, 0, 2, 0, 3}, DropModel::FailedHops({1}));
  EXPECT_FALSE(run.info_graph.HasEdge(1, 2));
  EXPECT_FALSE(run.info_graph.HasEdge(0, 2));
  EXPECT_TRUE(run.info_graph.HasEdge(1, 3));
  EXPECT_TRUE(run.info_graph.HasEdge(2, 3));
  EXPECT_TRUE(run.info_graph.HasEdge(0, 3));
}

TEST(RunDistributedTest, ConditioningIsUnionOfInNeighbourPicks) {
  std::mt19937_64 rng(44);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t agents = 2 + seed % 4;
    const PartitionMatroid m = AgentBlocks(agents, 2);
    const auto f = testing::RandomFamilyOracle(static_cast<int>(seed),
                                               m.ground_size(), seed);
    const CommGraph g = CommGraph::Star(agents);
    const MessageSchedule s = FindMessageSequence(g);
    const DistributedResult run =
        RunDistributedSG(*f, m, s.walk, DropModel::Bernoulli(0.5, rng()));
    for (AgentId a = 0; a < agents; ++a) {
      Subset expected(m.ground_size());
      for (AgentId b : run.info_graph.InNeighbors(a)) {
        expected |= run.agent_picks[b];
      }
      EXPECT_EQ(run.conditioning[a], expected);
      // Transitively closed.
      for (AgentId b : run.info_graph.InNeighbors(a)) {
        for (AgentId c : run.info_graph.InNeighbors(b)) {
          EXPECT_TRUE(run.info_graph.HasEdge(c, a));
        }
      }
    }
  }
}

TEST(RunDistributedTest, BernoulliIsSeedDeterministic) {
  const PartitionMatroid m = AgentBlocks(4, 2);
  const CoverageOracle f(RandomCoverage(8, 1));
  const std::vector<AgentId> walk = {1, 0, 2, 0, 3};
  const DistributedResult a =
      RunDistributedSG(f, m, walk, DropModel::Bernoulli(0.5, 7));
  const DistributedResult b =
      RunDistributedSG(f, m, walk, DropModel::Bernoulli(0.5, 7));
  EXPECT_EQ(a.set, b.set);
  EXPECT_EQ(a.info_graph.Edges(), b.info_graph.Edges());
  EXPECT_THROW(DropModel::Bernoulli(1.5, 0).Validate(), std::invalid_argument);
}

TEST(CliqueNumberTest, Examples) {
  InfoGraph empty(5);
  EXPECT_EQ(CliqueNumber(empty), 1u);
  InfoGraph full(4);
  for (AgentId a = 0; a < 4; ++a) {
    for (AgentId b = a + 1; b < 4; ++b) full.AddEdge(a, b);
  }
  EXPECT_EQ(CliqueNumber(full), 4u);
  InfoGraph triads(6);
  for (AgentId base : {0u, 3u}) {
    triads.AddEdge(base, base + 1);
    triads.AddEdge(base, base + 2);
    triads.AddEdge(base + 1, base + 2);
  }
  triads.AddEdge(2, 3);
  EXPECT_EQ(CliqueNumber(triads), 3u);
}

TEST(CliqueNumberTest, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 9;
    InfoGraph g(n);
    for (AgentId a = 0; a < n; ++a) {
      for (AgentId b = a + 1; b < n; ++b) {
        if (coin(rng)) g.AddEdge(a, b);
      }
    }
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      bool clique = true;
      for (AgentId a = 0; a < n && clique; ++a) {
        for (AgentId b = a + 1; b < n && clique; ++b) {
          if (((mask >> a) & (mask >> b) & 1u) && !g.HasEdge(a, b)) {
            clique = false;
          }
        }
      }
      if (clique) {
        best = std::max<std::size_t>(best, testing::Popcount(mask));
      }
    }
    EXPECT_EQ(CliqueNumber(g), best);
  }
}

TEST(GapBoundTest, Examples) {
  EXPECT_DOUBLE_EQ(GapBoundIncomplete(4, 4), 0.5);
  EXPECT_DOUBLE_EQ(GapBoundIncomplete(3, 1), 0.25);
  EXPECT_DOUBLE_EQ(GapBoundIncomplete(4, 2), 0.25);
  EXPECT_THROW(GapBoundIncomplete(3, 0), std::invalid_argument);
  EXPECT_THROW(GapBoundIncomplete(3, 4), std::invalid_argument);
}

TEST(NonEdgeHopsTest, FindsMissingLinks) {
  const CommGraph g(3, {{0, 1}});
  EXPECT_EQ(NonEdgeHops(g, {0, 1, 2}), (std::set<std::size_t>{1}));
}

TEST(BernoulliSweepTest, DegenerateProbabilities) {
  const PartitionMatroid m = AgentBlocks(3, 2);
  const CoverageOracle f(RandomCoverage(6, 5));
  const MessageSchedule s = FindMessageSequence(CommGraph::Path(3));
  const SweepResult sweep = BernoulliSweep(f, m, s, {1.0, 0.0}, 10, 1);
  ASSERT_EQ(sweep.rows.size(), 20u);
  const double central =
      SequentialGreedyPartition(f, m, s.FirstVisitOrder()).final_value;
  for (std::size_t t = 0; t < 10; ++t) {
    EXPECT_DOUBLE_EQ(sweep.rows[t].value, central);
    EXPECT_EQ(sweep.rows[t].omega, 3u);
    EXPECT_EQ(sweep.rows[10 + t].omega, 1u);
    EXPECT_DOUBLE_EQ(sweep.rows[10 + t].value, sweep.rows[10].value);
  }
}

TEST(BernoulliSweepTest, RatiosRespectCliqueBound) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PartitionMatroid m = AgentBlocks(3, 3, 1 + seed % 2);
    const auto f = testing::RandomFamilyOracle(static_cast<int>(seed),
                                               m.ground_size(), seed);
    const MessageSchedule s = FindMessageSequence(CommGraph::Path(3));
    const SweepResult sweep = BernoulliSweep(*f, m, s, {0.5}, 200, seed);
    for (const SweepRow& row : sweep.rows) {
      EXPECT_GE(row.ratio, GapBoundIncomplete(3, row.omega) - 1e-9);
    }
  }
}

TEST(BernoulliSweepTest, WorkerCountDoesNotChangeRows) {
  const PartitionMatroid m = AgentBlocks(4, 2);
  const CoverageOracle f(RandomCoverage(8, 2));
  const MessageSchedule s = FindMessageSequence(CommGraph::Star(4));
  const SweepResult one = BernoulliSweep(f, m, s, {0.2, 0.7}, 25, 11, 1);
  const SweepResult four = BernoulliSweep(f, m, s, {0.2, 0.7}, 25, 11, 4);
  EXPECT_EQ(one.RowsCsv(), four.RowsCsv());
}

}  // namespace
}  // namespace submodular
