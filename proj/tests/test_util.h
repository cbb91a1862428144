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

#ifndef SUBMODULAR_TESTS_TEST_UTIL_H_
#define SUBMODULAR_TESTS_TEST_UTIL_H_

// Reference computations for tests. These deliberately avoid the library's
// own algorithms: optima come from visiting every bit mask, multilinear values
// from summing products of probabilities.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "submodular/functions.h"
#include "submodular/generators.h"
#include "submodular/matroid.h"
#include "submodular/subset.h"
#include "submodular/value_oracle.h"

namespace submodular::testing {

struct NaiveOptimum {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t mask = 0;
};

// Maximum of f over every mask accepted by `feasible`; ties to the smallest
// mask in lexicographic element order.
inline NaiveOptimum NaiveOpt(
    std::size_t n, const std::function<double(std::uint64_t)>& f,
    const std::function<bool(std::uint64_t)>& feasible) {
  NaiveOptimum best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!feasible(mask)) continue;
    const double v = f(mask);
    if (v > best.value) {
      best.value = v;
      best.mask = mask;
    }
  }
  return best;
}

inline NaiveOptimum NaiveOpt(const ValueOracle& f,
                             const IndependenceOracle& m) {
  const std::size_t n = f.ground_size();
  return NaiveOpt(
      n,
      [&](std::uint64_t mask) { return f.Evaluate(Subset::FromMask(n, mask)); },
      [&](std::uint64_t mask) {
        return m.IsIndependent(Subset::FromMask(n, mask));
      });
}

inline int Popcount(std::uint64_t mask) { return __builtin_popcountll(mask); }

// Partition feasibility straight from block lists.
inline bool FitsBlocks(std::uint64_t mask,
                       const std::vector<std::vector<ElementId>>& blocks,
                       const std::vector<std::size_t>& kappas) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::size_t used = 0;
    for (ElementId p : blocks[i]) used += (mask >> p) & 1u;
    if (used > kappas[i]) return false;
  }
  return true;
}

// sum over masks of f(mask) * prod x_p^[p in mask] (1 - x_p)^[p not in mask].
inline double NaiveMultilinear(const std::function<double(std::uint64_t)>& f,
                               const std::vector<double>& x) {
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double prob = 1.0;
    for (std::size_t p = 0; p < n; ++p) {
      prob *= ((mask >> p) & 1u) ? x[p] : 1.0 - x[p];
    }
    total += prob * f(mask);
  }
  return total;
}

// Weighted coverage recomputed with a std::set union.
inline double NaiveCoverage(const CoverageInstance& inst, std::uint64_t mask) {
  std::set<std::size_t> covered;
  for (std::size_t p = 0; p < inst.covers.size(); ++p) {
    if ((mask >> p) & 1u)
      covered.insert(inst.covers[p].begin(), inst.covers[p].end());
  }
  double total = 0.0;
  for (std::size_t item : covered) total += inst.item_weights[item];
  return total;
}

// Random monotone submodular oracle from one of the three main families.
inline std::unique_ptr<ValueOracle> RandomFamilyOracle(int family,
                                                       std::size_t n,
                                                       std::uint64_t seed) {
  switch (family % 3) {
    case 0:
      return std::make_unique<CoverageOracle>(RandomCoverage(n, seed));
    case 1:
      return std::make_unique<ExemplarOracle>(RandomExemplar(n, seed));
    default:
      return std::make_unique<RankOracle>(RandomRank(n, seed));
  }
}

inline std::vector<double> RandomPoint(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = unit(rng);
  return x;
}

}  // namespace submodular::testing

#endif  // SUBMODULAR_TESTS_TEST_UTIL_H_
