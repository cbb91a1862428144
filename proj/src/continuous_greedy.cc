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

#include "submodular/continuous_greedy.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "submodular/generators.h"
#include "submodular/properties.h"

namespace submodular {
namespace {

constexpr double kIntegralTolerance = 1e-9;

void CheckLength(const MembershipVector& x, const PartitionMatroid& m) {
  if (x.size() != m.ground_size()) {
    throw std::invalid_argument("membership vector has the wrong length");
  }
}

using FValue = std::function<double(const MembershipVector&)>;

bool IsFractional(double v) {
  return v > kIntegralTolerance && v < 1.0 - kIntegralTolerance;
}

double Snap(double v) {
  if (v <= kIntegralTolerance) return 0.0;
  if (v >= 1.0 - kIntegralTolerance) return 1.0;
  return v;
}

PipageResult Round(const MembershipVector& x_in, const PartitionMatroid& m,
                   const FValue& value) {
  CheckLength(x_in, m);
  MembershipVector x = x_in;
  for (std::size_t i = 0; i < m.num_blocks(); ++i) {
    double sum = 0.0;
    for (ElementId p : m.block(i)) sum += x[p];
    const double rounded = std::round(sum);
    if (std::abs(sum - rounded) > kIntegralTolerance) {
      throw std::invalid_argument("block " + std::to_string(i) +
                                  " sum is not integral; cannot round "
                                  "losslessly");
    }
    if (rounded > static_cast<double>(m.kappa(i)) + kIntegralTolerance) {
      throw std::invalid_argument("block " + std::to_string(i) +
                                  " sum exceeds its budget");
    }
  }
  for (std::size_t p = 0; p < x.size(); ++p) x.Set(p, Snap(x[p]));

  PipageResult result;
  for (std::size_t i = 0; i < m.num_blocks(); ++i) {
    while (true) {
      std::vector<ElementId> fractional;
      for (ElementId p : m.block(i)) {
        if (IsFractional(x[p])) fractional.push_back(p);
        if (fractional.size() == 2) break;
      }
      if (fractional.size() < 2) {
        // One stray fractional entry is accumulated rounding error.
        for (ElementId p : fractional) x.Set(p, std::round(x[p]));
        break;
      }
      const ElementId p = fractional[0];
      const ElementId q = fractional[1];
      // Two endpoints of the segment {x + t (e_p - e_q)} inside the box.
      MembershipVector up = x;
      const double rise = std::min(1.0 - x[p], x[q]);
      up.Set(p, Snap(x[p] + rise));
      up.Set(q, Snap(x[q] - rise));
      MembershipVector down = x;
      const double fall = std::min(x[p], 1.0 - x[q]);
      down.Set(p, Snap(x[p] - fall));
      down.Set(q, Snap(x[q] + fall));
      x = value(up) >= value(down) ? up : down;
      ++result.moves;
    }
  }
  result.set = Subset(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p] > 0.5) result.set.Insert(p);
  }
  return result;
}

}  // namespace

bool MatroidPolytope::Contains(const MembershipVector& x,
                               double tolerance) const {
  if (x.size() != matroid_.ground_size()) return false;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p] < -tolerance || x[p] > 1.0 + tolerance) return false;
  }
  const std::vector<double> sums = BlockSums(x);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] > static_cast<double>(matroid_.kappa(i)) + tolerance) {
      return false;
    }
  }
  return true;
}

std::vector<double> MatroidPolytope::BlockSums(
    const MembershipVector& x) const {
  std::vector<double> sums(matroid_.num_blocks(), 0.0);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    for (ElementId p : matroid_.block(i)) sums[i] += x[p];
  }
  return sums;
}

void CGParams::Validate() const {
  if (steps == 0) throw std::invalid_argument("continuous greedy: T >= 1");
  if (mode == GradientMode::kSampled && samples == 0) {
    throw std::invalid_argument("continuous greedy: sampled mode needs K >= 1");
  }
}

std::vector<double> ConditionalGradientDirection(const std::vector<double>& g,
                                                 const PartitionMatroid& m) {
  if (g.size() != m.ground_size()) {
    throw std::invalid_argument("gradient has the wrong length");
  }
  for (double v : g) {
    if (v < 0.0) {
      throw std::domain_error(
          "conditional gradient needs a nonnegative "
          "gradient");
    }
  }
  std::vector<double> direction(g.size(), 0.0);
  for (std::size_t i = 0; i < m.num_blocks(); ++i) {
    std::vector<ElementId> order = m.block(i);  // ascending
    std::stable_sort(order.begin(), order.end(),
                     [&](ElementId a, ElementId b) { return g[a] > g[b]; });
    for (std::size_t j = 0; j < m.kappa(i); ++j) direction[order[j]] = 1.0;
  }
  return direction;
}

std::string ContinuousGreedyResult::TrajectoryCsv() const {
  std::ostringstream out;
  out.precision(17);
  out << "step,value";
  const std::size_t blocks =
      trajectory.empty() ? 0 : trajectory.front().block_sums.size();
  for (std::size_t i = 0; i < blocks; ++i) out << ",block_" << i;
  out << "\n";
  for (const TrajectoryPoint& point : trajectory) {
    out << point.step << "," << point.value;
    for (double s : point.block_sums) out << "," << s;
    out << "\n";
  }
  return out.str();
}

ContinuousGreedyResult ContinuousGreedy(const ValueOracle& f,
                                        const PartitionMatroid& m,
                                        const CGParams& params) {
  params.Validate();
  if (f.ground_size() != m.ground_size()) {
    throw std::invalid_argument("oracle and matroid ground sets differ");
  }
  const std::size_t n = f.ground_size();
  const bool sampled = params.mode == GradientMode::kSampled;
  std::optional<ExactMultilinear> exact;
  if (!sampled) exact.emplace(f);

  const MatroidPolytope polytope(m);
  // x_p = counts[p] / T exactly, so entries stay in [0, 1].
  std::vector<std::size_t> counts(n, 0);
  const double steps = static_cast<double>(params.steps);
  auto current = [&] {
    std::vector<double> values(n);
    for (std::size_t p = 0; p < n; ++p) values[p] = counts[p] / steps;
    return MembershipVector(std::move(values));
  };
  auto record = [&](std::size_t t, const MembershipVector& x,
                    ContinuousGreedyResult& result) {
    double value = 0.0;
    if (sampled) {
      std::mt19937_64 rng(DeriveSeed(params.seed, {1, t}));
      value = MultilinearEstimate(f, x, params.samples, rng).mean;
    } else {
      value = exact->Value(x);
    }
    result.trajectory.push_back({t, polytope.BlockSums(x), value});
  };

  ContinuousGreedyResult result;
  result.sampled = sampled;
  MembershipVector x = current();
  record(0, x, result);
  for (std::size_t t = 0; t < params.steps; ++t) {
    std::vector<double> grad;
    if (sampled) {
      std::mt19937_64 rng(DeriveSeed(params.seed, {0, t}));
      grad = GradEstimate(f, x, params.samples, rng);
    } else {
      grad = exact->Gradient(x);
    }
    // Exact sums of nonnegative gains cannot go negative except by rounding.
    for (double& g : grad) {
      if (g < 0.0 && g > -kValueTolerance) g = 0.0;
    }
    const std::vector<double> v = ConditionalGradientDirection(grad, m);
    for (std::size_t p = 0; p < n; ++p) {
      if (v[p] > 0.0) ++counts[p];
    }
    x = current();
    record(t + 1, x, result);
  }
  result.x_final = x;
  return result;
}

PipageResult PipageRound(const MembershipVector& x, const PartitionMatroid& m,
                         const ExactMultilinear& extension) {
  if (extension.size() != m.ground_size()) {
    throw std::invalid_argument("extension and matroid ground sets differ");
  }
  return Round(x, m,
               [&](const MembershipVector& y) { return extension.Value(y); });
}

PipageResult PipageRound(const MembershipVector& x, const PartitionMatroid& m,
                         const ValueOracle& f) {
  return PipageRound(x, m, ExactMultilinear(f));
}

PipageResult PipageRoundSampled(const MembershipVector& x,
                                const PartitionMatroid& m, const ValueOracle& f,
                                std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  std::uint64_t call = 0;
  PipageResult result = Round(x, m, [&](const MembershipVector& y) {
    std::mt19937_64 rng(DeriveSeed(seed, {call++}));
    return MultilinearEstimate(f, y, samples, rng).mean;
  });
  result.stochastic = true;
  return result;
}

double ChernoffSuccessProbability(double steps, double n, double samples) {
  if (!(steps > 0.0 && n > 0.0 && samples >= 0.0)) {
    throw std::invalid_argument(
        "Chernoff bound needs positive T, n and K >= 0");
  }
  return std::max(
      0.0, 1.0 - 2.0 * steps * n * std::exp(-samples / (8.0 * steps * steps)));
}

}  // namespace submodular
