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

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

#include "submodular/bruteforce.h"
#include "submodular/generators.h"
#include "submodular/parallel.h"
#include "submodular/properties.h"

namespace submodular {
namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;

// Breadth-first distances from `source`, with the parent used to reach each
// vertex (lowest-index parent among shortest routes).
void Bfs(const CommGraph& g, AgentId source, std::vector<int>& dist,
         std::vector<AgentId>& parent) {
  const std::size_t n = g.num_agents();
  dist.assign(n, kUnreachable);
  parent.assign(n, source);
  std::queue<AgentId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const AgentId v = queue.front();
    queue.pop();
    for (AgentId u : g.Neighbors(v)) {
      if (dist[u] != kUnreachable) continue;
      dist[u] = dist[v] + 1;
      parent[u] = v;
      queue.push(u);
    }
  }
}

MessageSchedule ExactSchedule(const CommGraph& g) {
  const std::size_t n = g.num_agents();
  const std::size_t full = (std::size_t{1} << n) - 1;
  // remaining[mask * n + v]: fewest further hops from v, having visited mask,
  // until every agent is visited.
  std::vector<int> remaining((full + 1) * n, kUnreachable);
  auto at = [&](std::size_t mask, AgentId v) -> int& {
    return remaining[mask * n + v];
  };
  for (std::size_t mask = full; mask >= 1; --mask) {
    for (AgentId v = 0; v < n; ++v) {
      if (!((mask >> v) & 1u)) continue;
      if (mask == full) {
        at(mask, v) = 0;
        continue;
      }
      int best = kUnreachable;
      for (AgentId u : g.Neighbors(v)) {
        if ((mask >> u) & 1u) continue;
        best = std::min(best, 1 + at(mask | (std::size_t{1} << u), u));
      }
      at(mask, v) = best;
    }
    // Moves inside the visited set keep the mask; relax them to a fixpoint.
    for (std::size_t round = 0; round < n; ++round) {
      bool changed = false;
      for (AgentId v = 0; v < n; ++v) {
        if (!((mask >> v) & 1u)) continue;
        for (AgentId u : g.Neighbors(v)) {
          if (!((mask >> u) & 1u)) continue;
          if (1 + at(mask, u) < at(mask, v)) {
            at(mask, v) = 1 + at(mask, u);
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
  }

  AgentId start = 0;
  for (AgentId s = 1; s < n; ++s) {
    if (at(std::size_t{1} << s, s) < at(std::size_t{1} << start, start)) {
      start = s;
    }
  }
  MessageSchedule schedule;
  schedule.walk.push_back(start);
  std::size_t mask = std::size_t{1} << start;
  AgentId v = start;
  while (at(mask, v) > 0) {
    bool moved = false;
    for (AgentId u : g.Neighbors(v)) {
      const std::size_t next = mask | (std::size_t{1} << u);
      if (1 + at(next, u) == at(mask, v)) {
        mask = next;
        v = u;
        schedule.walk.push_back(u);
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("walk reconstruction failed");
  }
  schedule.hamiltonian = schedule.walk.size() == n;
  schedule.optimal = true;
  return schedule;
}

MessageSchedule NearestNeighborSchedule(const CommGraph& g) {
  const std::size_t n = g.num_agents();
  std::vector<bool> visited(n, false);
  MessageSchedule schedule;
  AgentId v = 0;
  schedule.walk.push_back(v);
  visited[v] = true;
  std::size_t count = 1;
  std::vector<int> dist;
  std::vector<AgentId> parent;
  while (count < n) {
    Bfs(g, v, dist, parent);
    AgentId target = n;
    for (AgentId u = 0; u < n; ++u) {
      if (visited[u]) continue;
      if (target == n || dist[u] < dist[target]) target = u;
    }
    std::vector<AgentId> route;
    for (AgentId u = target; u != v; u = parent[u]) route.push_back(u);
    for (auto it = route.rbegin(); it != route.rend(); ++it) {
      schedule.walk.push_back(*it);
      if (!visited[*it]) {
        visited[*it] = true;
        ++count;
      }
    }
    v = target;
  }
  schedule.hamiltonian = schedule.walk.size() == n;
  schedule.optimal = false;
  return schedule;
}

void CheckWalk(std::size_t num_agents, const std::vector<AgentId>& walk) {
  std::vector<bool> seen(num_agents, false);
  for (AgentId a : walk) {
    if (a >= num_agents) {
      throw std::invalid_argument("schedule names agent " + std::to_string(a) +
                                  " but there are only " +
                                  std::to_string(num_agents));
    }
    seen[a] = true;
  }
  for (AgentId a = 0; a < num_agents; ++a) {
    if (!seen[a]) {
      throw std::invalid_argument("schedule never visits agent " +
                                  std::to_string(a));
    }
  }
}

// Largest clique containing `size` chosen vertices plus some of `candidates`.
void ExpandClique(const std::vector<std::uint32_t>& adjacency, std::size_t size,
                  std::uint32_t candidates, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) {
      return;
    }
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    ExpandClique(adjacency, size + 1, candidates & adjacency[v], best);
  }
}

}  // namespace

CommGraph::CommGraph(std::size_t num_agents,
                     const std::vector<std::pair<AgentId, AgentId>>& edges)
    : adjacency_(num_agents) {
  if (num_agents == 0) throw std::invalid_argument("graph needs an agent");
  for (const auto& [a, b] : edges) {
    if (a >= num_agents || b >= num_agents) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) throw std::invalid_argument("self loops are not allowed");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

CommGraph CommGraph::Complete(std::size_t num_agents) {
  std::vector<std::pair<AgentId, AgentId>> edges;
  for (AgentId a = 0; a < num_agents; ++a) {
    for (AgentId b = a + 1; b < num_agents; ++b) edges.emplace_back(a, b);
  }
  return CommGraph(num_agents, edges);
}

CommGraph CommGraph::Path(std::size_t num_agents) {
  std::vector<std::pair<AgentId, AgentId>> edges;
  for (AgentId a = 0; a + 1 < num_agents; ++a) edges.emplace_back(a, a + 1);
  return CommGraph(num_agents, edges);
}

CommGraph CommGraph::Star(std::size_t num_agents) {
  std::vector<std::pair<AgentId, AgentId>> edges;
  for (AgentId a = 1; a < num_agents; ++a) edges.emplace_back(0, a);
  return CommGraph(num_agents, edges);
}

bool CommGraph::Adjacent(AgentId a, AgentId b) const {
  if (a >= num_agents() || b >= num_agents()) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

const std::vector<AgentId>& CommGraph::Neighbors(AgentId a) const {
  return adjacency_.at(a);
}

std::vector<std::pair<AgentId, AgentId>> CommGraph::Edges() const {
  std::vector<std::pair<AgentId, AgentId>> edges;
  for (AgentId a = 0; a < num_agents(); ++a) {
    for (AgentId b : adjacency_[a]) {
      if (a < b) edges.emplace_back(a, b);
    }
  }
  return edges;
}

bool CommGraph::IsConnected() const {
  std::vector<int> dist;
  std::vector<AgentId> parent;
  Bfs(*this, 0, dist, parent);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

std::size_t MessageSchedule::revisits() const {
  std::vector<AgentId> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  return walk.size() - distinct;
}

std::vector<AgentId> MessageSchedule::FirstVisitOrder() const {
  std::vector<AgentId> order;
  for (AgentId a : walk) {
    if (std::find(order.begin(), order.end(), a) == order.end()) {
      order.push_back(a);
    }
  }
  return order;
}

std::string MessageSchedule::ToString() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i > 0) out << ",";
    out << walk[i];
  }
  out << ")";
  return out.str();
}

MessageSchedule FindMessageSequence(const CommGraph& g) {
  if (!g.IsConnected()) {
    throw std::invalid_argument(
        "communication graph is disconnected; no walk covers every agent");
  }
  if (g.num_agents() <= kMaxExactSchedule) return ExactSchedule(g);
  return NearestNeighborSchedule(g);
}

void ValidateSchedule(const CommGraph& g, const std::vector<AgentId>& walk) {
  CheckWalk(g.num_agents(), walk);
  for (std::size_t h = 0; h + 1 < walk.size(); ++h) {
    if (!g.Adjacent(walk[h], walk[h + 1])) {
      throw std::invalid_argument(
          "schedule hop " + std::to_string(h) + " (" + std::to_string(walk[h]) +
          " -> " + std::to_string(walk[h + 1]) + ") is not an edge");
    }
  }
}

bool HasHamiltonianPathBruteForce(const CommGraph& g) {
  if (g.num_agents() > 8) {
    throw SizeGuardError("Hamiltonian enumeration needs N <= 8");
  }
  std::vector<AgentId> order(g.num_agents());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool path = true;
    for (std::size_t i = 0; i + 1 < order.size() && path; ++i) {
      path = g.Adjacent(order[i], order[i + 1]);
    }
    if (path) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

DropModel DropModel::Bernoulli(double p_success, std::uint64_t seed) {
  DropModel model;
  model.mode = DropMode::kBernoulli;
  model.p_success = p_success;
  model.seed = seed;
  return model;
}

DropModel DropModel::FailedHops(std::set<std::size_t> hops) {
  DropModel model;
  model.mode = DropMode::kFailedHops;
  model.failed_hops = std::move(hops);
  return model;
}

void DropModel::Validate() const {
  if (!(p_success >= 0.0 && p_success <= 1.0)) {
    throw std::invalid_argument("p_success must lie in [0, 1]");
  }
}

void InfoGraph::AddEdge(AgentId from, AgentId to) {
  if (from >= num_agents() || to >= num_agents() || from == to) {
    throw std::invalid_argument("bad information edge");
  }
  in_[to][from] = true;
}

std::vector<AgentId> InfoGraph::InNeighbors(AgentId to) const {
  std::vector<AgentId> from;
  for (AgentId a = 0; a < num_agents(); ++a) {
    if (in_.at(to)[a]) from.push_back(a);
  }
  return from;
}

std::size_t InfoGraph::num_edges() const {
  std::size_t count = 0;
  for (const auto& row : in_) count += std::count(row.begin(), row.end(), true);
  return count;
}

std::vector<std::pair<AgentId, AgentId>> InfoGraph::Edges() const {
  std::vector<std::pair<AgentId, AgentId>> edges;
  for (AgentId from = 0; from < num_agents(); ++from) {
    for (AgentId to = 0; to < num_agents(); ++to) {
      if (in_[to][from]) edges.emplace_back(from, to);
    }
  }
  return edges;
}

DistributedResult RunDistributedSG(const ValueOracle& f,
                                   const PartitionMatroid& m,
                                   const std::vector<AgentId>& walk,
                                   const DropModel& drops) {
  if (f.ground_size() != m.ground_size()) {
    throw std::invalid_argument("oracle and matroid ground sets differ");
  }
  drops.Validate();
  const std::size_t agents = m.num_blocks();
  CheckWalk(agents, walk);
  const std::size_t n = f.ground_size();

  DistributedResult result;
  result.set = Subset(n);
  result.info_graph = InfoGraph(agents);
  result.trace.final_set = Subset(n);
  result.conditioning.assign(agents, Subset(n));
  result.agent_picks.assign(agents, Subset(n));

  std::vector<Subset> known(agents, Subset(n));
  std::vector<std::vector<bool>> known_agents(agents,
                                              std::vector<bool>(agents, false));
  std::vector<bool> decided(agents, false);
  std::mt19937_64 rng(drops.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (std::size_t k = 0; k < walk.size(); ++k) {
    const AgentId a = walk[k];
    if (!decided[a]) {
      decided[a] = true;
      result.decision_order.push_back(a);
      result.conditioning[a] = known[a];
      for (AgentId b = 0; b < agents; ++b) {
        if (known_agents[a][b]) result.info_graph.AddEdge(b, a);
      }
      Subset current_set = known[a];
      double current = f.Evaluate(current_set);
      result.trace.total_oracle_calls += 1;
      for (std::size_t j = 0; j < m.kappa(a); ++j) {
        bool found = false;
        ElementId best = 0;
        double best_value = 0.0;
        std::size_t calls = 0;
        for (ElementId p : m.block(a)) {
          if (current_set.Contains(p)) continue;
          const double value = f.Evaluate(current_set.With(p));
          ++calls;
          if (!found || value - current > best_value - current) {
            found = true;
            best = p;
            best_value = value;
          }
        }
        if (!found) break;
        result.trace.picks.push_back({best, best_value - current, calls});
        result.trace.total_oracle_calls += calls;
        current_set.Insert(best);
        result.agent_picks[a].Insert(best);
        current = best_value;
      }
      known[a] |= result.agent_picks[a];
      known_agents[a][a] = true;
      result.set |= result.agent_picks[a];
    }
    if (k + 1 == walk.size()) break;
    bool delivered = true;
    if (drops.mode != DropMode::kNone) {
      if (drops.mode == DropMode::kBernoulli) {
        // One draw per hop so the stream does not depend on earlier outcomes.
        delivered = unit(rng) < drops.p_success;
      }
      if (drops.failed_hops.count(k) > 0) delivered = false;
    }
    if (!delivered) {
      ++result.dropped_hops;
      continue;
    }
    const AgentId b = walk[k + 1];
    known[b] |= known[a];
    for (AgentId c = 0; c < agents; ++c) {
      if (known_agents[a][c]) known_agents[b][c] = true;
    }
  }
  result.trace.final_set = result.set;
  result.trace.final_value = f.Evaluate(result.set);
  result.trace.total_oracle_calls += 1;
  return result;
}

std::set<std::size_t> NonEdgeHops(const CommGraph& g,
                                  const std::vector<AgentId>& walk) {
  std::set<std::size_t> hops;
  for (std::size_t h = 0; h + 1 < walk.size(); ++h) {
    if (!g.Adjacent(walk[h], walk[h + 1])) hops.insert(h);
  }
  return hops;
}

std::size_t CliqueNumber(const InfoGraph& g) {
  const std::size_t n = g.num_agents();
  if (n > kMaxCliqueAgents) {
    throw SizeGuardError("clique number needs N <= " +
                         std::to_string(kMaxCliqueAgents));
  }
  if (n == 0) return 0;
  std::vector<std::uint32_t> adjacency(n, 0);
  for (const auto& [from, to] : g.Edges()) {
    adjacency[from] |= std::uint32_t{1} << to;
    adjacency[to] |= std::uint32_t{1} << from;
  }
  std::size_t best = 1;
  ExpandClique(adjacency, 0, (std::uint32_t{1} << n) - 1, best);
  return best;
}

double GapBoundIncomplete(std::size_t num_agents, std::size_t omega) {
  if (omega < 1 || omega > num_agents) {
    throw std::invalid_argument("clique number must lie in [1, N]");
  }
  return 1.0 /
         (2.0 + static_cast<double>(num_agents) - static_cast<double>(omega));
}

std::string SweepResult::RowsCsv() const {
  std::ostringstream out;
  out.precision(17);
  out << "trial,p,ratio,omega,hamiltonian_flag\n";
  for (const SweepRow& row : rows) {
    out << row.trial << "," << row.p << "," << row.ratio << "," << row.omega
        << "," << (row.hamiltonian ? 1 : 0) << "\n";
  }
  return out.str();
}

SweepResult BernoulliSweep(const ValueOracle& f, const PartitionMatroid& m,
                           const MessageSchedule& schedule,
                           const std::vector<double>& p_grid,
                           std::size_t trials, std::uint64_t seed,
                           std::size_t workers,
                           const std::set<std::size_t>& forced_failures) {
  SweepResult result;
  result.opt = BruteForceOpt(f, m).value;
  result.rows.resize(p_grid.size() * trials);
  ParallelFor(result.rows.size(), workers, [&](std::size_t index) {
    const std::size_t pi = index / trials;
    const std::size_t trial = index % trials;
    DropModel drops =
        DropModel::Bernoulli(p_grid[pi], DeriveSeed(seed, {pi, trial}));
    drops.failed_hops = forced_failures;
    const DistributedResult run = RunDistributedSG(f, m, schedule.walk, drops);
    SweepRow& row = result.rows[index];
    row.trial = trial;
    row.p = p_grid[pi];
    row.value = run.trace.final_value;
    row.ratio = EmpiricalGap(f, run.set, result.opt).ratio;
    row.omega = CliqueNumber(run.info_graph);
    row.hamiltonian = schedule.hamiltonian;
    row.dropped_hops = run.dropped_hops;
  });
  for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
    SweepSummary summary{.p = p_grid[pi]};
    if (trials > 0) {
      summary.min_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t t = 0; t < trials; ++t) {
        const SweepRow& row = result.rows[pi * trials + t];
        summary.mean_ratio += row.ratio;
        summary.min_ratio = std::min(summary.min_ratio, row.ratio);
        summary.mean_omega += static_cast<double>(row.omega);
      }
      summary.mean_ratio /= static_cast<double>(trials);
      summary.mean_omega /= static_cast<double>(trials);
    }
    result.summaries.push_back(summary);
  }
  return result;
}

}  // namespace submodular
