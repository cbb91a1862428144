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

#include "submodular/matroid.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace submodular {

void IndependenceOracle::CheckWidth(const Subset& s) const {
  if (s.width() != ground_size()) {
    throw std::invalid_argument("subset width " + std::to_string(s.width()) +
                                " does not match ground set of size " +
                                std::to_string(ground_size()));
  }
}

UniformMatroid::UniformMatroid(std::size_t n, std::size_t kappa)
    : n_(n), kappa_(kappa) {
  if (n == 0) throw std::invalid_argument("uniform matroid: empty ground set");
  if (kappa < 1 || kappa > n) {
    throw std::invalid_argument("uniform matroid: need 1 <= kappa <= n");
  }
}

bool UniformMatroid::IsIndependent(const Subset& s) const {
  CheckWidth(s);
  return s.Count() <= kappa_;
}

std::string UniformMatroid::name() const {
  return "uniform(n=" + std::to_string(n_) +
         ",kappa=" + std::to_string(kappa_) + ")";
}

PartitionMatroid::PartitionMatroid(std::size_t n,
                                   std::vector<std::vector<ElementId>> blocks,
                                   std::vector<std::size_t> kappas)
    : n_(n), blocks_(std::move(blocks)), kappas_(std::move(kappas)) {
  if (n == 0)
    throw std::invalid_argument("partition matroid: empty ground set");
  if (blocks_.empty())
    throw std::invalid_argument("partition matroid: no blocks");
  if (blocks_.size() != kappas_.size()) {
    throw std::invalid_argument("partition matroid: one budget per block");
  }
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  block_of_.assign(n, kUnassigned);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& block = blocks_[i];
    std::sort(block.begin(), block.end());
    if (block.empty()) {
      throw std::invalid_argument("partition matroid: block " +
                                  std::to_string(i) + " is empty");
    }
    if (kappas_[i] < 1 || kappas_[i] > block.size()) {
      throw std::invalid_argument("partition matroid: block " +
                                  std::to_string(i) +
                                  " needs 1 <= kappa <= block size");
    }
    for (ElementId p : block) {
      if (p >= n) {
        throw std::invalid_argument("partition matroid: element " +
                                    std::to_string(p) + " out of range");
      }
      if (block_of_[p] != kUnassigned) {
        throw std::invalid_argument("partition matroid: element " +
                                    std::to_string(p) +
                                    " appears in two blocks");
      }
      block_of_[p] = i;
    }
    block_sets_.push_back(Subset::FromElements(n, block));
  }
  for (ElementId p = 0; p < n; ++p) {
    if (block_of_[p] == kUnassigned) {
      throw std::invalid_argument("partition matroid: element " +
                                  std::to_string(p) + " is in no block");
    }
  }
}

PartitionMatroid PartitionMatroid::FromUniform(const UniformMatroid& m) {
  std::vector<ElementId> all(m.ground_size());
  for (ElementId p = 0; p < all.size(); ++p) all[p] = p;
  return PartitionMatroid(m.ground_size(), {all}, {m.kappa()});
}

bool PartitionMatroid::IsIndependent(const Subset& s) const {
  CheckWidth(s);
  std::vector<std::size_t> used(blocks_.size(), 0);
  bool ok = true;
  s.ForEach([&](ElementId p) {
    if (++used[block_of_[p]] > kappas_[block_of_[p]]) ok = false;
  });
  return ok;
}

std::size_t PartitionMatroid::RankCeiling() const {
  std::size_t total = 0;
  for (std::size_t k : kappas_) total += k;
  return total;
}

std::string PartitionMatroid::name() const {
  return "partition(n=" + std::to_string(n_) +
         ",blocks=" + std::to_string(blocks_.size()) + ")";
}

ExplicitIndependence::ExplicitIndependence(std::size_t n,
                                           std::vector<Subset> independent_sets,
                                           std::string name)
    : n_(n), sets_(std::move(independent_sets)), name_(std::move(name)) {
  if (n == 0) throw std::invalid_argument("explicit family: empty ground set");
  for (const Subset& s : sets_) {
    if (s.width() != n) {
      throw std::invalid_argument("explicit family: set width mismatch");
    }
    lookup_.insert(s);
    rank_ceiling_ = std::max(rank_ceiling_, s.Count());
  }
}

bool ExplicitIndependence::IsIndependent(const Subset& s) const {
  CheckWidth(s);
  return lookup_.contains(s);
}

PredicateIndependence::PredicateIndependence(std::size_t n, Fn fn,
                                             std::string name)
    : n_(n), fn_(std::move(fn)), name_(std::move(name)) {
  if (n == 0 || n > kMaxExhaustive) {
    throw SizeGuardError("predicate family needs 1 <= n <= " +
                         std::to_string(kMaxExhaustive));
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset s = Subset::FromMask(n, mask);
    if (fn_(s)) rank_ceiling_ = std::max(rank_ceiling_, s.Count());
  }
}

bool PredicateIndependence::IsIndependent(const Subset& s) const {
  CheckWidth(s);
  return fn_(s);
}

PropertyReport VerifyMatroidAxioms(const IndependenceOracle& m,
                                   const CheckOptions& opts) {
  PropertyReport report{.property = "matroid axioms"};
  const std::size_t n = m.ground_size();
  if (n > opts.max_exhaustive) {
    throw SizeGuardError("matroid verification needs n <= " +
                         std::to_string(opts.max_exhaustive));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> independent(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    independent[mask] = m.IsIndependent(Subset::FromMask(n, mask));
  }

  ++report.checks_performed;
  if (!independent[0]) {
    report.holds = false;
    report.witness = Witness{.s = Subset(n)};
    report.detail = "empty set is not independent";
    return report;
  }

  // Closure under single-element removal implies closure under all subsets.
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    if (!independent[mask]) continue;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      ++report.checks_performed;
      if (!independent[mask & ~bit]) {
        report.holds = false;
        report.witness = Witness{.s = Subset::FromMask(n, mask),
                                 .r = Subset::FromMask(n, mask & ~bit)};
        report.detail = "not downward closed";
        return report;
      }
    }
  }

  // With downward closure established, augmentation for |S| = |R| + 1 implies
  // it for every |S| > |R| (shrink S to |R| + 1 elements first).
  std::vector<std::vector<std::uint64_t>> by_size(n + 1);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (independent[mask]) by_size[__builtin_popcountll(mask)].push_back(mask);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::uint64_t r : by_size[k]) {
      for (std::uint64_t s : by_size[k + 1]) {
        ++report.checks_performed;
        bool extendable = false;
        for (std::uint64_t rest = s & ~r; rest != 0; rest &= rest - 1) {
          const std::uint64_t bit = rest & (~rest + 1);
          if (independent[r | bit]) {
            extendable = true;
            break;
          }
        }
        if (!extendable) {
          report.holds = false;
          report.witness =
              Witness{.s = Subset::FromMask(n, s), .r = Subset::FromMask(n, r)};
          report.detail = "augmentation fails";
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace submodular
