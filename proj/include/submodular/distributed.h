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

#ifndef SUBMODULAR_DISTRIBUTED_H_
#define SUBMODULAR_DISTRIBUTED_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "submodular/greedy.h"
#include "submodular/matroid.h"
#include "submodular/subset.h"
#include "submodular/value_oracle.h"

namespace submodular {

using AgentId = std::size_t;

// Undirected simple graph over agents 0..N-1.
class CommGraph {
 public:
  // Throws std::invalid_argument on self loops or out-of-range endpoints.
  // Duplicate edges are merged.
  CommGraph(std::size_t num_agents,
            const std::vector<std::pair<AgentId, AgentId>>& edges);

  static CommGraph Complete(std::size_t num_agents);
  static CommGraph Path(std::size_t num_agents);
  // Agent 0 is the hub.
  static CommGraph Star(std::size_t num_agents);

  std::size_t num_agents() const { return adjacency_.size(); }
  bool Adjacent(AgentId a, AgentId b) const;
  // Neighbors in ascending order.
  const std::vector<AgentId>& Neighbors(AgentId a) const;
  std::vector<std::pair<AgentId, AgentId>> Edges() const;
  bool IsConnected() const;

 private:
  std::vector<std::vector<AgentId>> adjacency_;
};

inline constexpr std::size_t kMaxExactSchedule = 12;

struct MessageSchedule {
  std::vector<AgentId> walk;
  // Every agent appears exactly once.
  bool hamiltonian = false;
  // False when the walk came from the heuristic for large N.
  bool optimal = true;

  std::size_t revisits() const;
  // Agents in the order they first appear.
  std::vector<AgentId> FirstVisitOrder() const;
  std::string ToString() const;
};

// Shortest walk along edges that visits every agent; among shortest walks,
// the lexicographically smallest. A Hamiltonian path is returned whenever one
// exists. N > kMaxExactSchedule falls back to nearest neighbor on shortest-path
// distances with optimal = false. Throws std::invalid_argument when the graph
// is disconnected.
MessageSchedule FindMessageSequence(const CommGraph& g);

// Throws std::invalid_argument unless the walk uses only edges of g and
// covers all agents.
void ValidateSchedule(const CommGraph& g, const std::vector<AgentId>& walk);

// Whether some ordering of the agents is a path in g, by enumerating all N!
// orders. For cross-checking; N <= 8.
bool HasHamiltonianPathBruteForce(const CommGraph& g);

enum class DropMode { kNone, kBernoulli, kFailedHops };

// Hop h carries the message from walk[h] to walk[h + 1].
struct DropModel {
  DropMode mode = DropMode::kNone;
  double p_success = 1.0;
  // Hops that always fail; honored in every mode except kNone.
  std::set<std::size_t> failed_hops;
  std::uint64_t seed = 0;

  static DropModel None() { return {}; }
  static DropModel Bernoulli(double p_success, std::uint64_t seed);
  static DropModel FailedHops(std::set<std::size_t> hops);
  void Validate() const;
};

// Edge (i, j) means agent j held agent i's picks when it chose. Knowledge
// travels with forwarded messages, so the edge set is transitively closed
// along delivery chains.
class InfoGraph {
 public:
  explicit InfoGraph(std::size_t num_agents)
      : in_(num_agents, std::vector<bool>(num_agents, false)) {}

  std::size_t num_agents() const { return in_.size(); }
  void AddEdge(AgentId from, AgentId to);
  bool HasEdge(AgentId from, AgentId to) const { return in_[to][from]; }
  std::vector<AgentId> InNeighbors(AgentId to) const;
  std::size_t num_edges() const;
  std::vector<std::pair<AgentId, AgentId>> Edges() const;

 private:
  // in_[to][from]
  std::vector<std::vector<bool>> in_;
};

struct DistributedResult {
  Subset set;
  InfoGraph info_graph{0};
  // Picks in decision order.
  GreedyTrace trace;
  // conditioning[i]: the picks agent i knew of when it chose.
  std::vector<Subset> conditioning;
  // Agent i's own picks.
  std::vector<Subset> agent_picks;
  // Agents in decision order.
  std::vector<AgentId> decision_order;
  std::size_t dropped_hops = 0;
};

// Agent i owns block i of m. Agents decide at their first visit on the walk,
// running kappa_i greedy picks from their block conditioned only on picks
// received so far. Each hop forwards everything the sender knows and may be
// lost per `drops`. Throws std::invalid_argument when the walk references
// unknown agents or misses one.
DistributedResult RunDistributedSG(const ValueOracle& f,
                                   const PartitionMatroid& m,
                                   const std::vector<AgentId>& walk,
                                   const DropModel& drops);

// Hops of `walk` that do not follow an edge of g.
std::set<std::size_t> NonEdgeHops(const CommGraph& g,
                                  const std::vector<AgentId>& walk);

inline constexpr std::size_t kMaxCliqueAgents = 20;

// Largest clique of the undirected closure of g; 1 for an edgeless graph with
// at least one agent. Throws SizeGuardError above kMaxCliqueAgents agents.
std::size_t CliqueNumber(const InfoGraph& g);

// 1 / (2 + N - omega). Requires 1 <= omega <= N.
double GapBoundIncomplete(std::size_t num_agents, std::size_t omega);

struct SweepRow {
  std::size_t trial = 0;
  double p = 0.0;
  double ratio = 0.0;
  std::size_t omega = 0;
  bool hamiltonian = false;
  double value = 0.0;
  std::size_t dropped_hops = 0;
};

struct SweepSummary {
  double p = 0.0;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double mean_omega = 0.0;
};

struct SweepResult {
  double opt = 0.0;
  std::vector<SweepRow> rows;  // ordered by (p index, trial)
  std::vector<SweepSummary> summaries;

  // "trial,p,ratio,omega,hamiltonian_flag" lines.
  std::string RowsCsv() const;
};

// For each p, `trials` Bernoulli runs with seeds derived from (seed, p index,
// trial). `forced_failures` are added to every run's failed hops. Trials may
// run on `workers` threads; output does not depend on the worker count.
SweepResult BernoulliSweep(const ValueOracle& f, const PartitionMatroid& m,
                           const MessageSchedule& schedule,
                           const std::vector<double>& p_grid,
                           std::size_t trials, std::uint64_t seed,
                           std::size_t workers = 1,
                           const std::set<std::size_t>& forced_failures = {});

}  // namespace submodular

#endif  // SUBMODULAR_DISTRIBUTED_H_
