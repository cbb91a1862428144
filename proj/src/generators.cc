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

#include "submodular/generators.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace submodular {
namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void RequirePositive(std::size_t n, const char* what) {
  if (n == 0)
    throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = SplitMix(seed);
  for (std::uint64_t k : keys)
    h = SplitMix(h ^ SplitMix(k + 0x632be59bd9b4e019ULL));
  return h;
}

CoverageInstance RandomCoverage(std::size_t n, std::uint64_t seed,
                                std::size_t universe, double density) {
  RequirePositive(n, "RandomCoverage");
  if (universe == 0) universe = 2 * n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 5);
  std::bernoulli_distribution covers(density);
  std::uniform_int_distribution<std::size_t> any_item(0, universe - 1);
  CoverageInstance inst;
  for (std::size_t i = 0; i < universe; ++i) {
    inst.item_weights.push_back(weight(rng));
  }
  inst.covers.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < universe; ++i) {
      if (covers(rng)) inst.covers[p].push_back(i);
    }
    if (inst.covers[p].empty()) inst.covers[p].push_back(any_item(rng));
  }
  return inst;
}

ExemplarInstance RandomExemplar(std::size_t n, std::uint64_t seed,
                                std::size_t num_data) {
  RequirePositive(n, "RandomExemplar");
  if (num_data == 0) num_data = 2 * n;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  ExemplarInstance inst;
  for (std::size_t p = 0; p < n; ++p) {
    inst.candidates.push_back({coord(rng), coord(rng)});
  }
  for (std::size_t d = 0; d < num_data; ++d) {
    inst.data.push_back({coord(rng), coord(rng)});
  }
  // Beyond the far corner of the box by more than its diagonal.
  inst.phantom = {300.0, 300.0};
  return inst;
}

TrafficTopology RandomTrafficTopology(std::size_t n, std::uint64_t seed) {
  RequirePositive(n, "RandomTrafficTopology");
  std::mt19937_64 rng(seed);
  const std::size_t nodes = std::max<std::size_t>(3, n / 2 + 1);
  std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  // A directed path first so the network is connected, then random links.
  for (std::size_t v = 0; v + 1 < nodes && links.size() < n; ++v) {
    links.emplace_back(v, v + 1);
    used.insert(links.back());
  }
  const std::size_t max_links = nodes * (nodes - 1);
  while (links.size() < n) {
    const std::size_t a = node(rng);
    const std::size_t b = node(rng);
    if (a == b) continue;
    if (used.size() < max_links && used.contains({a, b})) continue;
    used.insert({a, b});
    links.emplace_back(a, b);
  }
  std::vector<std::size_t> interior;
  std::bernoulli_distribution keep(0.7);
  for (std::size_t v = 1; v + 1 < nodes; ++v) interior.push_back(v);
  if (keep(rng)) interior.push_back(0);
  return {.num_nodes = nodes, .links = links, .interior = interior};
}

RankInstance RandomRank(std::size_t n, std::uint64_t seed) {
  const TrafficTopology t = RandomTrafficTopology(n, seed);
  return TrafficRankInstance(t.num_nodes, t.links, t.interior);
}

ModularInstance RandomModular(std::size_t n, std::uint64_t seed) {
  RequirePositive(n, "RandomModular");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(0, 10);
  ModularInstance inst;
  for (std::size_t p = 0; p < n; ++p) inst.weights.push_back(weight(rng));
  return inst;
}

PartitionMatroid RandomPartition(std::size_t n, std::size_t max_blocks,
                                 std::size_t max_kappa, std::uint64_t seed) {
  RequirePositive(n, "RandomPartition");
  if (max_blocks == 0 || max_kappa == 0) {
    throw std::invalid_argument("RandomPartition: need blocks and budgets");
  }
  std::mt19937_64 rng(seed);
  const std::size_t blocks = std::uniform_int_distribution<std::size_t>(
      1, std::min(max_blocks, n))(rng);
  // Choose blocks - 1 distinct cut points in [1, n - 1].
  std::vector<std::size_t> cuts(n - 1);
  for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(blocks - 1);
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::vector<ElementId>> parts;
  std::vector<std::size_t> kappas;
  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    std::vector<ElementId> part;
    for (std::size_t p = cuts[b]; p < cuts[b + 1]; ++p) part.push_back(p);
    const std::size_t cap = std::min(max_kappa, part.size());
    kappas.push_back(std::uniform_int_distribution<std::size_t>(1, cap)(rng));
    parts.push_back(std::move(part));
  }
  return PartitionMatroid(n, std::move(parts), std::move(kappas));
}

}  // namespace submodular
