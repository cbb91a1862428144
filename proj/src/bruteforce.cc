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

#include "submodular/bruteforce.h"

#include <stdexcept>

#include "submodular/properties.h"

namespace submodular {
namespace {

class Enumerator {
 public:
  Enumerator(const ValueOracle& f, const IndependenceOracle& m)
      : f_(f), m_(m), n_(f.ground_size()), current_(n_) {}

  OptimumResult Run() {
    best_.set = current_;
    best_.value = f_.Evaluate(current_);
    best_.independent_sets_visited = 1;
    Visit(0);
    return best_;
  }

 private:
  // Sets whose smallest-undecided element is `next`; current_ is independent.
  void Visit(ElementId next) {
    for (ElementId p = next; p < n_; ++p) {
      current_.Insert(p);
      if (m_.IsIndependent(current_)) {
        ++best_.independent_sets_visited;
        const double value = f_.Evaluate(current_);
        if (value > best_.value ||
            (value == best_.value && current_.LexLess(best_.set))) {
          best_.value = value;
          best_.set = current_;
        }
        Visit(p + 1);
      }
      current_.Erase(p);
    }
  }

  const ValueOracle& f_;
  const IndependenceOracle& m_;
  std::size_t n_;
  Subset current_;
  OptimumResult best_;
};

}  // namespace

OptimumResult BruteForceOpt(const ValueOracle& f, const IndependenceOracle& m) {
  if (f.ground_size() != m.ground_size()) {
    throw std::invalid_argument("oracle and matroid ground sets differ");
  }
  if (f.ground_size() > kMaxBruteForce) {
    throw SizeGuardError("brute force needs n <= " +
                         std::to_string(kMaxBruteForce));
  }
  if (!m.IsIndependent(Subset(f.ground_size()))) {
    throw std::invalid_argument("empty set is not independent");
  }
  return Enumerator(f, m).Run();
}

GapResult EmpiricalGap(const ValueOracle& f, const Subset& s, double opt) {
  GapResult gap{.value = f.Evaluate(s), .opt = opt};
  if (opt == 0.0) {
    gap.opt_zero = true;
    gap.ratio = 1.0;
    return gap;
  }
  gap.ratio = gap.value / opt;
  return gap;
}

GapResult EmpiricalGap(const ValueOracle& f, const IndependenceOracle& m,
                       const Subset& s) {
  return EmpiricalGap(f, s, BruteForceOpt(f, m).value);
}

}  // namespace submodular
