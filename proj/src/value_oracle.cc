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

#include "submodular/value_oracle.h"

#include <stdexcept>
#include <utility>

namespace submodular {

FunctionOracle::FunctionOracle(std::size_t n, Fn fn, std::string name)
    : n_(n), fn_(std::move(fn)), name_(std::move(name)) {
  if (n == 0) throw std::invalid_argument("oracle ground set must be nonempty");
}

double MarginalGain(const ValueOracle& f, ElementId p, const Subset& s) {
  if (s.width() != f.ground_size()) {
    throw std::invalid_argument("subset width does not match oracle");
  }
  const double base = f.Evaluate(s);
  if (s.Contains(p)) return 0.0;  // also range-checks p
  return f.Evaluate(s.With(p)) - base;
}

double ValueRangeBound(const ValueOracle& f) {
  if (auto bound = f.value_upper_bound()) return *bound;
  const std::size_t n = f.ground_size();
  double sum = 0.0;
  for (ElementId p = 0; p < n; ++p) {
    sum += f.Evaluate(Subset(n, {p}));
  }
  return sum;
}

std::vector<double> Tabulate(const ValueOracle& f) {
  const std::size_t n = f.ground_size();
  if (n > 24) throw std::length_error("tabulation requires n <= 24");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> values(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    values[mask] = f.Evaluate(Subset::FromMask(n, mask));
  }
  return values;
}

TableOracle::TableOracle(std::size_t n, std::vector<double> values,
                         std::string name)
    : n_(n), values_(std::move(values)), name_(std::move(name)) {
  if (n == 0 || n > 24)
    throw std::invalid_argument("table oracle needs 1<=n<=24");
  if (values_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("table size must be 2^n");
  }
}

}  // namespace submodular
