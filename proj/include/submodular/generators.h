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

#ifndef SUBMODULAR_GENERATORS_H_
#define SUBMODULAR_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "submodular/functions.h"
#include "submodular/matroid.h"

namespace submodular {

// SplitMix64 finalizer over (seed, a, b, ...). Every random stream in the
// project is keyed this way so results do not depend on evaluation order.
std::uint64_t DeriveSeed(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> keys);

// `universe` items with integer weights in [1, 5]; each element covers each
// item independently with probability `density` (at least one item).
CoverageInstance RandomCoverage(std::size_t n, std::uint64_t seed,
                                std::size_t universe = 0, double density = 0.3);

// Candidates and data uniform in [0, 100]^2; the phantom sits beyond the
// bounding box so it is farther from every datum than any candidate.
ExemplarInstance RandomExemplar(std::size_t n, std::uint64_t seed,
                                std::size_t num_data = 0);

struct TrafficTopology {
  std::size_t num_nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::vector<std::size_t> interior;
};

// n directed links over max(3, n/2 + 1) nodes: a path through all nodes, then
// uniformly random links. Inner nodes conserve flow; node 0 usually does too.
TrafficTopology RandomTrafficTopology(std::size_t n, std::uint64_t seed);

// A random directed network with n links whose interior nodes carry flow
// conservation rows; every link is a measurement candidate.
RankInstance RandomRank(std::size_t n, std::uint64_t seed);

// Integer weights in [0, 10].
ModularInstance RandomModular(std::size_t n, std::uint64_t seed);

// Up to max_blocks contiguous nonempty blocks, budgets in [1, max_kappa]
// capped by block size.
PartitionMatroid RandomPartition(std::size_t n, std::size_t max_blocks,
                                 std::size_t max_kappa, std::uint64_t seed);

}  // namespace submodular

#endif  // SUBMODULAR_GENERATORS_H_
