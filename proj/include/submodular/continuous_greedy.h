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

#ifndef SUBMODULAR_CONTINUOUS_GREEDY_H_
#define SUBMODULAR_CONTINUOUS_GREEDY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "submodular/matroid.h"
#include "submodular/multilinear.h"
#include "submodular/subset.h"
#include "submodular/value_oracle.h"

namespace submodular {

// The polytope {x in [0,1]^n : sum over block i of x <= kappa_i}.
class MatroidPolytope {
 public:
  explicit MatroidPolytope(PartitionMatroid m) : matroid_(std::move(m)) {}

  bool Contains(const MembershipVector& x, double tolerance = 1e-12) const;
  std::vector<double> BlockSums(const MembershipVector& x) const;
  const PartitionMatroid& matroid() const { return matroid_; }

 private:
  PartitionMatroid matroid_;
};

enum class GradientMode { kExact, kSampled };

struct CGParams {
  std::size_t steps = 50;   // T
  std::size_t samples = 0;  // K, per gradient estimate (sampled mode)
  std::uint64_t seed = 0;
  GradientMode mode = GradientMode::kExact;

  void Validate() const;
};

// A vertex of the polytope maximizing w . g: per block, ones at the kappa_i
// largest entries of g (ties to the lowest index). Throws std::domain_error on
// negative entries.
std::vector<double> ConditionalGradientDirection(const std::vector<double>& g,
                                                 const PartitionMatroid& m);

struct TrajectoryPoint {
  std::size_t step = 0;
  std::vector<double> block_sums;
  // Exact F in exact mode, a K-sample estimate in sampled mode.
  double value = 0.0;
};

struct ContinuousGreedyResult {
  MembershipVector x_final{0};
  // Entry t describes x after t updates, t = 0..T.
  std::vector<TrajectoryPoint> trajectory;
  bool sampled = false;

  // "step,value,block_0,block_1,..." lines.
  std::string TrajectoryCsv() const;
};

// Discretized continuous greedy: x <- x + v(x) / T for T steps from x = 0,
// where v is the conditional-gradient direction at the current iterate.
ContinuousGreedyResult ContinuousGreedy(const ValueOracle& f,
                                        const PartitionMatroid& m,
                                        const CGParams& params);

struct PipageResult {
  Subset set;
  std::size_t moves = 0;
  // Endpoints were compared with sampled F values.
  bool stochastic = false;
};

// Deterministic pipage rounding for partition matroids. Each move shifts mass
// between two fractional coordinates of one block to whichever endpoint has
// the larger F; F is convex along such lines, so it never decreases. Requires
// integral block sums not exceeding kappa_i.
PipageResult PipageRound(const MembershipVector& x, const PartitionMatroid& m,
                         const ExactMultilinear& extension);
PipageResult PipageRound(const MembershipVector& x, const PartitionMatroid& m,
                         const ValueOracle& f);
// Compares endpoints with `samples`-sample estimates; for large n.
PipageResult PipageRoundSampled(const MembershipVector& x,
                                const PartitionMatroid& m, const ValueOracle& f,
                                std::size_t samples, std::uint64_t seed);

// max(0, 1 - 2 T n exp(-K / (8 T^2))).
double ChernoffSuccessProbability(double steps, double n, double samples);

}  // namespace submodular

#endif  // SUBMODULAR_CONTINUOUS_GREEDY_H_
