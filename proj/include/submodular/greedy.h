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

#ifndef SUBMODULAR_GREEDY_H_
#define SUBMODULAR_GREEDY_H_

#include <cstddef>
#include <string>
#include <vector>

#include "submodular/matroid.h"
#include "submodular/subset.h"
#include "submodular/value_oracle.h"

namespace submodular {

struct GreedyPick {
  ElementId element = 0;
  // Marginal gain against the picks made before it.
  double gain = 0.0;
  // Oracle calls spent choosing this pick.
  std::size_t oracle_calls = 0;
};

// Audit trail of a greedy run.
struct GreedyTrace {
  std::vector<GreedyPick> picks;
  Subset final_set;
  double final_value = 0.0;
  // Includes the initial evaluation of f({}).
  std::size_t total_oracle_calls = 0;

  // "element,gain,oracle_calls" lines preceded by a header.
  std::string ToCsv() const;
};

// Adds the feasible element of largest marginal gain until no element can be
// added. Ties go to the lowest index; zero-gain picks are still made.
GreedyTrace SequentialGreedy(const ValueOracle& f, const IndependenceOracle& m);

// Works through the blocks in `block_order`, taking kappa_i greedy picks from
// block i conditioned on every earlier pick. An empty order means 0..N-1.
GreedyTrace SequentialGreedyPartition(
    const ValueOracle& f, const PartitionMatroid& m,
    const std::vector<std::size_t>& block_order = {});

// Same output as SequentialGreedy for submodular f, using stale gains as upper
// bounds in a max-heap and re-evaluating only the top entry. For f that is not
// submodular the output may differ; this is not detected.
GreedyTrace LazyGreedy(const ValueOracle& f, const IndependenceOracle& m);

// (1 - e^{-c}) / c, with value 1 at c = 0. Requires c in [0, 1].
double BoundUniformCurvature(double c);

// 1 / (1 + c). Requires c in [0, 1].
double BoundPartitionCurvature(double c);

}  // namespace submodular

#endif  // SUBMODULAR_GREEDY_H_
