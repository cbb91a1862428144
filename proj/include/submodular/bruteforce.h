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

#ifndef SUBMODULAR_BRUTEFORCE_H_
#define SUBMODULAR_BRUTEFORCE_H_

#include <cstddef>

#include "submodular/matroid.h"
#include "submodular/subset.h"
#include "submodular/value_oracle.h"

namespace submodular {

inline constexpr std::size_t kMaxBruteForce = 20;

struct OptimumResult {
  Subset set;
  double value = 0.0;
  std::size_t independent_sets_visited = 0;
};

// Exact maximum of f over the independent sets of m, by depth-first
// enumeration that cuts a branch as soon as it becomes dependent (sound for
// downward-closed families). Ties go to the lexicographically smallest set.
// Requires n <= kMaxBruteForce.
OptimumResult BruteForceOpt(const ValueOracle& f, const IndependenceOracle& m);

struct GapResult {
  // f(S) / OPT, or 1 when OPT is 0.
  double ratio = 1.0;
  double value = 0.0;
  double opt = 0.0;
  // OPT was zero, so the ratio is vacuous.
  bool opt_zero = false;
};

// Empirical optimality ratio of S. Uses `opt` when given, otherwise runs
// BruteForceOpt.
GapResult EmpiricalGap(const ValueOracle& f, const IndependenceOracle& m,
                       const Subset& s);
GapResult EmpiricalGap(const ValueOracle& f, const Subset& s, double opt);

}  // namespace submodular

#endif  // SUBMODULAR_BRUTEFORCE_H_
