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

#ifndef SUBMODULAR_MULTILINEAR_H_
#define SUBMODULAR_MULTILINEAR_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "submodular/subset.h"
#include "submodular/value_oracle.h"

namespace submodular {

inline constexpr std::size_t kMaxExactMultilinear = 20;

// Membership probabilities x in [0, 1]^n.
class MembershipVector {
 public:
  explicit MembershipVector(std::size_t n) : x_(n, 0.0) {}
  // Throws std::invalid_argument on entries outside [0, 1].
  explicit MembershipVector(std::vector<double> x);
  static MembershipVector Indicator(const Subset& s);

  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t p) const { return x_[p]; }
  // Clamps nothing; callers keep entries in [0, 1].
  void Set(std::size_t p, double value);
  const std::vector<double>& values() const { return x_; }

  // Random set containing each p independently with probability x_p.
  Subset Sample(std::mt19937_64& rng) const;

 private:
  std::vector<double> x_;
};

// The multilinear extension of f computed from a full value table. Sums run
// in a fixed mask order, so results are bitwise reproducible.
class ExactMultilinear {
 public:
  // Tabulates f; requires n <= kMaxExactMultilinear.
  explicit ExactMultilinear(const ValueOracle& f);

  std::size_t size() const { return n_; }
  double Value(const MembershipVector& x) const;
  // dF/dx_p = E[f(R + p) - f(R - p)].
  std::vector<double> Gradient(const MembershipVector& x) const;
  // d2F/dx_p dx_q = E[f(R+p+q) - f(R+q-p) - f(R+p-q) + f(R-p-q)], p != q.
  double CrossPartial(const MembershipVector& x, ElementId p,
                      ElementId q) const;
  const std::vector<double>& table() const { return table_; }

 private:
  // Probability of each mask under x with the coordinates in `zeroed` forced
  // to 0, i.e. the distribution of R restricted to the other coordinates.
  std::vector<double> MaskProbabilities(const MembershipVector& x,
                                        std::uint64_t zeroed) const;
  void CheckSize(const MembershipVector& x) const;

  std::size_t n_;
  std::vector<double> table_;
};

double MultilinearExact(const ValueOracle& f, const MembershipVector& x);
std::vector<double> GradExact(const ValueOracle& f, const MembershipVector& x);

struct Estimate {
  double mean = 0.0;
  // Hoeffding half-width at the requested confidence.
  double half_width = 0.0;
};

// Monte-Carlo estimate of F(x) from k sampled sets. The half-width uses the
// oracle's value bound, or the singleton-sum fallback.
Estimate MultilinearEstimate(const ValueOracle& f, const MembershipVector& x,
                             std::size_t k, std::mt19937_64& rng,
                             double confidence = 0.99);

// Hoeffding half-width for k samples of a variable with range `range`.
double HoeffdingHalfWidth(double range, std::size_t k, double confidence);

// Monte-Carlo gradient with common random numbers: each sampled R yields
// f(R + p) - f(R - p) for every coordinate p.
std::vector<double> GradEstimate(const ValueOracle& f,
                                 const MembershipVector& x, std::size_t k,
                                 std::mt19937_64& rng);

}  // namespace submodular

#endif  // SUBMODULAR_MULTILINEAR_H_
