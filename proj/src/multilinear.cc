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

#include "submodular/multilinear.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "submodular/properties.h"

namespace submodular {

MembershipVector::MembershipVector(std::vector<double> x) : x_(std::move(x)) {
  for (std::size_t p = 0; p < x_.size(); ++p) {
    if (!(x_[p] >= 0.0 && x_[p] <= 1.0)) {
      throw std::invalid_argument("membership entry " + std::to_string(p) +
                                  " outside [0, 1]");
    }
  }
}

MembershipVector MembershipVector::Indicator(const Subset& s) {
  MembershipVector x(s.width());
  s.ForEach([&](ElementId p) { x.x_[p] = 1.0; });
  return x;
}

void MembershipVector::Set(std::size_t p, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("membership entry outside [0, 1]");
  }
  x_.at(p) = value;
}

Subset MembershipVector::Sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Subset s(x_.size());
  for (std::size_t p = 0; p < x_.size(); ++p) {
    // Draw for every coordinate so the stream does not depend on x.
    if (unit(rng) < x_[p]) s.Insert(p);
  }
  return s;
}

ExactMultilinear::ExactMultilinear(const ValueOracle& f) : n_(f.ground_size()) {
  if (n_ > kMaxExactMultilinear) {
    throw SizeGuardError("exact multilinear extension needs n <= " +
                         std::to_string(kMaxExactMultilinear));
  }
  table_ = Tabulate(f);
}

void ExactMultilinear::CheckSize(const MembershipVector& x) const {
  if (x.size() != n_) {
    throw std::invalid_argument("membership vector has the wrong length");
  }
}

std::vector<double> ExactMultilinear::MaskProbabilities(
    const MembershipVector& x, std::uint64_t zeroed) const {
  std::vector<double> prob(table_.size(), 0.0);
  prob[0] = 1.0;
  for (std::size_t p = 0; p < n_; ++p) {
    const double xp = (zeroed >> p) & 1u ? 0.0 : x[p];
    const std::uint64_t bit = std::uint64_t{1} << p;
    for (std::uint64_t mask = 0; mask < bit; ++mask) {
      prob[mask | bit] = prob[mask] * xp;
      prob[mask] *= 1.0 - xp;
    }
  }
  return prob;
}

double ExactMultilinear::Value(const MembershipVector& x) const {
  CheckSize(x);
  const std::vector<double> prob = MaskProbabilities(x, 0);
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < table_.size(); ++mask) {
    total += prob[mask] * table_[mask];
  }
  return total;
}

std::vector<double> ExactMultilinear::Gradient(
    const MembershipVector& x) const {
  CheckSize(x);
  std::vector<double> grad(n_, 0.0);
  for (std::size_t p = 0; p < n_; ++p) {
    const std::uint64_t bit = std::uint64_t{1} << p;
    const std::vector<double> prob = MaskProbabilities(x, bit);
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < table_.size(); ++mask) {
      if (mask & bit) continue;
      total += prob[mask] * (table_[mask | bit] - table_[mask]);
    }
    grad[p] = total;
  }
  return grad;
}

double ExactMultilinear::CrossPartial(const MembershipVector& x, ElementId p,
                                      ElementId q) const {
  CheckSize(x);
  if (p >= n_ || q >= n_ || p == q) {
    throw std::invalid_argument("cross partial needs distinct valid p, q");
  }
  const std::uint64_t bp = std::uint64_t{1} << p;
  const std::uint64_t bq = std::uint64_t{1} << q;
  const std::vector<double> prob = MaskProbabilities(x, bp | bq);
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < table_.size(); ++mask) {
    if (mask & (bp | bq)) continue;
    total += prob[mask] * (table_[mask | bp | bq] - table_[mask | bq] -
                           table_[mask | bp] + table_[mask]);
  }
  return total;
}

double MultilinearExact(const ValueOracle& f, const MembershipVector& x) {
  return ExactMultilinear(f).Value(x);
}

std::vector<double> GradExact(const ValueOracle& f, const MembershipVector& x) {
  return ExactMultilinear(f).Gradient(x);
}

double HoeffdingHalfWidth(double range, std::size_t k, double confidence) {
  if (k == 0) throw std::invalid_argument("need at least one sample");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  const double delta = 1.0 - confidence;
  return range * std::sqrt(std::log(2.0 / delta) / (2.0 * k));
}

Estimate MultilinearEstimate(const ValueOracle& f, const MembershipVector& x,
                             std::size_t k, std::mt19937_64& rng,
                             double confidence) {
  if (x.size() != f.ground_size()) {
    throw std::invalid_argument("membership vector has the wrong length");
  }
  if (k == 0) throw std::invalid_argument("need at least one sample");
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) total += f.Evaluate(x.Sample(rng));
  return Estimate{
      .mean = total / static_cast<double>(k),
      .half_width = HoeffdingHalfWidth(ValueRangeBound(f), k, confidence),
  };
}

std::vector<double> GradEstimate(const ValueOracle& f,
                                 const MembershipVector& x, std::size_t k,
                                 std::mt19937_64& rng) {
  const std::size_t n = f.ground_size();
  if (x.size() != n) {
    throw std::invalid_argument("membership vector has the wrong length");
  }
  if (k == 0) throw std::invalid_argument("need at least one sample");
  std::vector<double> grad(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    Subset r = x.Sample(rng);
    const double base = f.Evaluate(r);
    for (ElementId p = 0; p < n; ++p) {
      if (r.Contains(p)) {
        r.Erase(p);
        grad[p] += base - f.Evaluate(r);
        r.Insert(p);
      } else {
        r.Insert(p);
        grad[p] += f.Evaluate(r) - base;
        r.Erase(p);
      }
    }
  }
  for (double& g : grad) g /= static_cast<double>(k);
  return grad;
}

}  // namespace submodular
