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

#ifndef SUBMODULAR_PROPERTIES_H_
#define SUBMODULAR_PROPERTIES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodular/subset.h"
#include "submodular/value_oracle.h"

namespace submodular {

// Absolute tolerance for comparisons of oracle values.
inline constexpr double kValueTolerance = 1e-9;
// Largest ground set the checkers enumerate exhaustively by default.
inline constexpr std::size_t kMaxExhaustive = 14;

// Thrown when exhaustive enumeration is requested beyond its ceiling.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A violating configuration. Which fields are meaningful depends on the
// property: normality uses only `s`; monotonicity (s, p); diminishing returns
// (s, r, p) with s a subset of r; the lattice form (s, r).
struct Witness {
  Subset s;
  std::optional<Subset> r;
  std::optional<ElementId> p;

  std::string ToString() const;
};

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;
  std::size_t checks_performed = 0;
  // False when the verdict rests on random samples ("sampled, not proven").
  bool exhaustive = true;
  std::string detail;

  std::string ToString() const;
};

struct CheckOptions {
  double tolerance = kValueTolerance;
  std::size_t max_exhaustive = kMaxExhaustive;
  // Required (nonzero) when n exceeds max_exhaustive.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

PropertyReport CheckNormal(const ValueOracle& f, const CheckOptions& opts = {});
PropertyReport CheckMonotone(const ValueOracle& f,
                             const CheckOptions& opts = {});
// Diminishing-returns form: gain(p|S) >= gain(p|R) for S within R, p not in R.
PropertyReport CheckSubmodular(const ValueOracle& f,
                               const CheckOptions& opts = {});
// Lattice form: f(S) + f(R) >= f(S | R) + f(S & R). Exhaustive only.
PropertyReport CheckSubmodularLattice(const ValueOracle& f,
                                      const CheckOptions& opts = {});

struct CurvatureReport {
  double curvature = 1.0;
  // Elements whose singleton gain is zero; each forces curvature 1.
  std::vector<ElementId> zero_singletons;
  // False when the minimum was taken only at R = P \ {p}, which is exact for
  // submodular f but was not enumerated.
  bool exhaustive = true;
  std::size_t checks_performed = 0;

  bool zero_singleton_flag() const { return !zero_singletons.empty(); }
};

// Total curvature 1 - min_{R, p not in R} gain(p|R) / gain(p|{}).
// Precondition: f normal, monotone and submodular.
CurvatureReport TotalCurvature(const ValueOracle& f,
                               const CheckOptions& opts = {});

}  // namespace submodular

#endif  // SUBMODULAR_PROPERTIES_H_
