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

#ifndef SUBMODULAR_MATROID_H_
#define SUBMODULAR_MATROID_H_

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "submodular/properties.h"
#include "submodular/subset.h"

namespace submodular {

// Independence oracle of a set system over {0, ..., n-1}. Solvers accept any
// implementation; uniform and partition matroids count directly.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  // Throws std::invalid_argument when s has the wrong width.
  virtual bool IsIndependent(const Subset& s) const = 0;
  virtual std::size_t ground_size() const = 0;
  // Size of the largest independent set.
  virtual std::size_t RankCeiling() const = 0;
  virtual std::string name() const = 0;

 protected:
  void CheckWidth(const Subset& s) const;
};

class UniformMatroid : public IndependenceOracle {
 public:
  // Requires 1 <= kappa <= n.
  UniformMatroid(std::size_t n, std::size_t kappa);

  bool IsIndependent(const Subset& s) const override;
  std::size_t ground_size() const override { return n_; }
  std::size_t RankCeiling() const override { return kappa_; }
  std::string name() const override;

  std::size_t kappa() const { return kappa_; }

 private:
  std::size_t n_;
  std::size_t kappa_;
};

class PartitionMatroid : public IndependenceOracle {
 public:
  // Blocks must be disjoint, nonempty and cover {0, ..., n-1};
  // 1 <= kappas[i] <= |blocks[i]|.
  PartitionMatroid(std::size_t n, std::vector<std::vector<ElementId>> blocks,
                   std::vector<std::size_t> kappas);

  // The single-block partition matroid equivalent to a uniform one.
  static PartitionMatroid FromUniform(const UniformMatroid& m);

  bool IsIndependent(const Subset& s) const override;
  std::size_t ground_size() const override { return n_; }
  std::size_t RankCeiling() const override;
  std::string name() const override;

  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<ElementId>& block(std::size_t i) const {
    return blocks_.at(i);
  }
  const Subset& block_set(std::size_t i) const { return block_sets_.at(i); }
  std::size_t kappa(std::size_t i) const { return kappas_.at(i); }
  const std::vector<std::size_t>& kappas() const { return kappas_; }
  std::size_t BlockOf(ElementId p) const { return block_of_.at(p); }

 private:
  std::size_t n_;
  std::vector<std::vector<ElementId>> blocks_;
  std::vector<Subset> block_sets_;
  std::vector<std::size_t> kappas_;
  std::vector<std::size_t> block_of_;
};

// An explicitly listed family of independent sets. Nothing about the family
// is assumed; VerifyMatroidAxioms decides whether it is a matroid.
class ExplicitIndependence : public IndependenceOracle {
 public:
  ExplicitIndependence(std::size_t n, std::vector<Subset> independent_sets,
                       std::string name = "explicit");

  bool IsIndependent(const Subset& s) const override;
  std::size_t ground_size() const override { return n_; }
  std::size_t RankCeiling() const override { return rank_ceiling_; }
  std::string name() const override { return name_; }

  const std::vector<Subset>& sets() const { return sets_; }

 private:
  std::size_t n_;
  std::vector<Subset> sets_;
  std::unordered_set<Subset, SubsetHash> lookup_;
  std::size_t rank_ceiling_ = 0;
  std::string name_;
};

// Independence given by a predicate. Rank ceiling is found by enumeration,
// so n is limited to kMaxExhaustive.
class PredicateIndependence : public IndependenceOracle {
 public:
  using Fn = std::function<bool(const Subset&)>;

  PredicateIndependence(std::size_t n, Fn fn, std::string name = "predicate");

  bool IsIndependent(const Subset& s) const override;
  std::size_t ground_size() const override { return n_; }
  std::size_t RankCeiling() const override { return rank_ceiling_; }
  std::string name() const override { return name_; }

 private:
  std::size_t n_;
  Fn fn_;
  std::size_t rank_ceiling_ = 0;
  std::string name_;
};

// Exhaustively checks that the empty set is independent, that the family is
// downward closed, and the augmentation property. Witness fields: `s` is the
// offending set (for closure failures `r` is the dependent subset); for
// augmentation failures `s` is the larger set and `r` the one that cannot be
// extended.
PropertyReport VerifyMatroidAxioms(const IndependenceOracle& m,
                                   const CheckOptions& opts = {});

}  // namespace submodular

#endif  // SUBMODULAR_MATROID_H_
