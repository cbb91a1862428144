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

#include "submodular/greedy.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace submodular {
namespace {

void CheckCompatible(const ValueOracle& f, const IndependenceOracle& m) {
  if (f.ground_size() != m.ground_size()) {
    throw std::invalid_argument("oracle and matroid ground sets differ");
  }
}

void CheckCurvature(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::domain_error("curvature must lie in [0, 1]");
  }
}

}  // namespace

std::string GreedyTrace::ToCsv() const {
  std::ostringstream out;
  out.precision(17);
  out << "element,gain,oracle_calls\n";
  for (const GreedyPick& pick : picks) {
    out << pick.element << "," << pick.gain << "," << pick.oracle_calls << "\n";
  }
  return out.str();
}

GreedyTrace SequentialGreedy(const ValueOracle& f,
                             const IndependenceOracle& m) {
  CheckCompatible(f, m);
  const std::size_t n = f.ground_size();
  GreedyTrace trace{.final_set = Subset(n)};
  double current = f.Evaluate(trace.final_set);
  trace.total_oracle_calls = 1;
  while (true) {
    bool found = false;
    ElementId best = 0;
    double best_value = 0.0;
    std::size_t calls = 0;
    for (ElementId p = 0; p < n; ++p) {
      if (trace.final_set.Contains(p)) continue;
      const Subset candidate = trace.final_set.With(p);
      if (!m.IsIndependent(candidate)) continue;
      const double value = f.Evaluate(candidate);
      ++calls;
      // Strict comparison keeps the lowest index among ties.
      if (!found || value - current > best_value - current) {
        found = true;
        best = p;
        best_value = value;
      }
    }
    if (!found) break;
    trace.picks.push_back({best, best_value - current, calls});
    trace.total_oracle_calls += calls;
    trace.final_set.Insert(best);
    current = best_value;
  }
  trace.final_value = current;
  return trace;
}

GreedyTrace SequentialGreedyPartition(
    const ValueOracle& f, const PartitionMatroid& m,
    const std::vector<std::size_t>& block_order) {
  CheckCompatible(f, m);
  std::vector<std::size_t> order = block_order;
  if (order.empty()) {
    order.resize(m.num_blocks());
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i || sorted.size() != m.num_blocks()) {
        throw std::invalid_argument("block order must be a permutation");
      }
    }
  }
  const std::size_t n = f.ground_size();
  GreedyTrace trace{.final_set = Subset(n)};
  double current = f.Evaluate(trace.final_set);
  trace.total_oracle_calls = 1;
  for (std::size_t block : order) {
    for (std::size_t j = 0; j < m.kappa(block); ++j) {
      bool found = false;
      ElementId best = 0;
      double best_value = 0.0;
      std::size_t calls = 0;
      for (ElementId p : m.block(block)) {
        if (trace.final_set.Contains(p)) continue;
        const double value = f.Evaluate(trace.final_set.With(p));
        ++calls;
        if (!found || value - current > best_value - current) {
          found = true;
          best = p;
          best_value = value;
        }
      }
      if (!found) break;  // unreachable while kappa <= |block|
      trace.picks.push_back({best, best_value - current, calls});
      trace.total_oracle_calls += calls;
      trace.final_set.Insert(best);
      current = best_value;
    }
  }
  trace.final_value = current;
  return trace;
}

GreedyTrace LazyGreedy(const ValueOracle& f, const IndependenceOracle& m) {
  CheckCompatible(f, m);
  const std::size_t n = f.ground_size();

  struct Entry {
    double bound;
    // f(S + element) for the S of `epoch`.
    double value;
    ElementId element;
    // Number of picks made when `bound` was computed.
    std::size_t epoch;
  };
  // Largest bound on top; among equal bounds the lowest index.
  auto lower_priority = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.element > b.element;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> heap(
      lower_priority);

  GreedyTrace trace{.final_set = Subset(n)};
  double current = f.Evaluate(trace.final_set);
  trace.total_oracle_calls = 1;
  std::size_t calls = 0;
  for (ElementId p = 0; p < n; ++p) {
    const Subset candidate = trace.final_set.With(p);
    if (!m.IsIndependent(candidate)) continue;
    const double value = f.Evaluate(candidate);
    heap.push({value - current, value, p, 0});
    ++calls;
  }

  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    const Subset candidate = trace.final_set.With(top.element);
    // Once dependent, an element stays dependent as the set grows.
    if (!m.IsIndependent(candidate)) continue;
    if (top.epoch == trace.picks.size()) {
      trace.picks.push_back({top.element, top.bound, calls});
      trace.total_oracle_calls += calls;
      calls = 0;
      trace.final_set.Insert(top.element);
      current = top.value;
      continue;
    }
    top.value = f.Evaluate(candidate);
    top.bound = top.value - current;
    top.epoch = trace.picks.size();
    ++calls;
    heap.push(top);
  }
  trace.total_oracle_calls += calls;
  trace.final_value = current;
  return trace;
}

double BoundUniformCurvature(double c) {
  CheckCurvature(c);
  if (c == 0.0) return 1.0;
  return -std::expm1(-c) / c;
}

double BoundPartitionCurvature(double c) {
  CheckCurvature(c);
  return 1.0 / (1.0 + c);
}

}  // namespace submodular
