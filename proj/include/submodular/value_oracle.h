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

#ifndef SUBMODULAR_VALUE_ORACLE_H_
#define SUBMODULAR_VALUE_ORACLE_H_

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "submodular/subset.h"

namespace submodular {

// Black-box set function f : 2^P -> R. Implementations must be pure: equal
// subsets give equal values, and Evaluate may be called concurrently.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual double Evaluate(const Subset& s) const = 0;
  virtual std::size_t ground_size() const = 0;
  virtual std::string name() const { return "oracle"; }

  // Upper bound on f over all subsets, used for concentration widths.
  virtual std::optional<double> value_upper_bound() const {
    return std::nullopt;
  }
  virtual std::optional<double> curvature_hint() const { return std::nullopt; }
};

using OraclePtr = std::shared_ptr<const ValueOracle>;

// Adapts a callable. Handy for tests and decoys.
class FunctionOracle : public ValueOracle {
 public:
  using Fn = std::function<double(const Subset&)>;

  FunctionOracle(std::size_t n, Fn fn, std::string name = "function");

  double Evaluate(const Subset& s) const override { return fn_(s); }
  std::size_t ground_size() const override { return n_; }
  std::string name() const override { return name_; }

 private:
  std::size_t n_;
  Fn fn_;
  std::string name_;
};

// Forwards to another oracle and counts calls. The wrapped oracle must outlive
// this object.
class CountingOracle : public ValueOracle {
 public:
  explicit CountingOracle(const ValueOracle& inner) : inner_(inner) {}

  double Evaluate(const Subset& s) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_.Evaluate(s);
  }
  std::size_t ground_size() const override { return inner_.ground_size(); }
  std::string name() const override { return inner_.name(); }
  std::optional<double> value_upper_bound() const override {
    return inner_.value_upper_bound();
  }
  std::optional<double> curvature_hint() const override {
    return inner_.curvature_hint();
  }

  std::size_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void Reset() { calls_.store(0); }

 private:
  const ValueOracle& inner_;
  mutable std::atomic<std::size_t> calls_{0};
};

// f(S + p) - f(S). Two oracle calls, or one when p is already in S.
double MarginalGain(const ValueOracle& f, ElementId p, const Subset& s);

// Falls back to the sum of singleton values when the oracle carries no
// metadata; valid for normal monotone submodular f.
double ValueRangeBound(const ValueOracle& f);

// f evaluated on every subset, indexed by bit mask. Requires n <= 24.
std::vector<double> Tabulate(const ValueOracle& f);

// Exposes a precomputed value table as an oracle.
class TableOracle : public ValueOracle {
 public:
  TableOracle(std::size_t n, std::vector<double> values,
              std::string name = "table");

  double Evaluate(const Subset& s) const override { return values_[s.Mask()]; }
  std::size_t ground_size() const override { return n_; }
  std::string name() const override { return name_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
  std::string name_;
};

}  // namespace submodular

#endif  // SUBMODULAR_VALUE_ORACLE_H_
