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

#ifndef SUBMODULAR_FUNCTIONS_H_
#define SUBMODULAR_FUNCTIONS_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "submodular/matroid.h"
#include "submodular/subset.h"
#include "submodular/value_oracle.h"

namespace submodular {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double EuclideanDistance(const Point& a, const Point& b);

using Dissimilarity = std::function<double(const Point&, const Point&)>;

// ---------------------------------------------------------------------------
// Exemplar-based clustering.
//
// Candidates are the selectable exemplar locations, data are the points to be
// represented, and the phantom d0 is an auxiliary exemplar that is always
// present when computing the utility. The dissimilarity need not be symmetric.
struct ExemplarInstance {
  std::vector<Point> candidates;
  std::vector<Point> data;
  Point phantom;
  Dissimilarity dist = EuclideanDistance;
};

enum class ExemplarLossMode {
  // Sum over data of the distance to the nearest chosen exemplar. Makes the
  // utility monotone submodular; the default everywhere.
  kMedoid,
  // Average over chosen exemplars of the distance to their nearest datum.
  kChosenAverage,
};

// Loss of the exemplar set R (candidate indices). R must be nonempty.
double ExemplarLoss(const ExemplarInstance& inst, const Subset& r,
                    ExemplarLossMode mode = ExemplarLossMode::kMedoid);

// L({d0}) - L(R + {d0}). R may be empty.
double ExemplarUtility(const ExemplarInstance& inst, const Subset& r,
                       ExemplarLossMode mode = ExemplarLossMode::kMedoid);

// Throws std::invalid_argument when candidates or data are empty or a
// dissimilarity is negative.
void ValidateExemplarInstance(const ExemplarInstance& inst);

class ExemplarOracle : public ValueOracle {
 public:
  explicit ExemplarOracle(ExemplarInstance inst,
                          ExemplarLossMode mode = ExemplarLossMode::kMedoid);

  double Evaluate(const Subset& s) const override;
  std::size_t ground_size() const override { return inst_.candidates.size(); }
  std::string name() const override { return "exemplar"; }
  std::optional<double> value_upper_bound() const override;

  const ExemplarInstance& instance() const { return inst_; }

 private:
  ExemplarInstance inst_;
  ExemplarLossMode mode_;
  // dist(candidate p, datum d), row-major by candidate.
  std::vector<double> cand_to_data_;
  std::vector<double> phantom_to_data_;
  double phantom_loss_ = 0.0;
};

// ---------------------------------------------------------------------------
// Weighted coverage: f(S) = total weight of the items covered by S.
struct CoverageInstance {
  std::vector<double> item_weights;
  // covers[p] lists the items covered by element p.
  std::vector<std::vector<std::size_t>> covers;
};

double CoverageValue(const CoverageInstance& inst, const Subset& s);

class CoverageOracle : public ValueOracle {
 public:
  explicit CoverageOracle(CoverageInstance inst);

  double Evaluate(const Subset& s) const override;
  std::size_t ground_size() const override { return inst_.covers.size(); }
  std::string name() const override { return "coverage"; }
  std::optional<double> value_upper_bound() const override { return total_; }

  const CoverageInstance& instance() const { return inst_; }

 private:
  CoverageInstance inst_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> cover_bits_;
  double total_ = 0.0;
};

// ---------------------------------------------------------------------------
// Flow identifiability: rank of the flow-conservation rows stacked with the
// measurement rows of the monitored links.
inline constexpr double kRankTolerance = 1e-7;

struct RankInstance {
  std::size_t num_links = 0;
  std::vector<std::vector<double>> base_rows;
  // One row per candidate link.
  std::vector<std::vector<double>> measurement_rows;
};

// Row-echelon rank with partial pivoting; pivots below tolerance * max|entry|
// count as zero.
std::size_t MatrixRank(std::vector<std::vector<double>> rows,
                       double tolerance = kRankTolerance);

// Rank of base rows plus the measurement rows of the links in `measured`.
double RankValue(const RankInstance& inst, const Subset& measured);

// Conservation rows (inflow - outflow = 0) at every node in `interior`, and a
// unit measurement row per link.
RankInstance TrafficRankInstance(
    std::size_t num_nodes,
    const std::vector<std::pair<std::size_t, std::size_t>>& links,
    const std::vector<std::size_t>& interior);

// The identifiability gain RankValue(L) - RankValue({}), which is normal.
class RankOracle : public ValueOracle {
 public:
  explicit RankOracle(RankInstance inst);

  double Evaluate(const Subset& s) const override;
  std::size_t ground_size() const override {
    return inst_.measurement_rows.size();
  }
  std::string name() const override { return "rank"; }
  std::optional<double> value_upper_bound() const override;

  const RankInstance& instance() const { return inst_; }
  double base_rank() const { return base_rank_; }

 private:
  RankInstance inst_;
  double base_rank_ = 0.0;
};

// ---------------------------------------------------------------------------
struct ModularInstance {
  std::vector<double> weights;
};

class ModularOracle : public ValueOracle {
 public:
  explicit ModularOracle(ModularInstance inst);

  double Evaluate(const Subset& s) const override;
  std::size_t ground_size() const override { return inst_.weights.size(); }
  std::string name() const override { return "modular"; }
  std::optional<double> value_upper_bound() const override;
  std::optional<double> curvature_hint() const override { return 0.0; }

  const ModularInstance& instance() const { return inst_; }

 private:
  ModularInstance inst_;
};

// ---------------------------------------------------------------------------
// Welfare maximization recast over (item, agent) pairs. Pair (i, j) has index
// i * num_agents + j; block i holds all pairs of item i with budget 1.
struct WelfareLift {
  std::size_t num_items = 0;
  std::size_t num_agents = 0;
  std::shared_ptr<const ValueOracle> oracle;
  PartitionMatroid matroid;

  ElementId Index(std::size_t item, std::size_t agent) const {
    return item * num_agents + agent;
  }
};

// Each local oracle is defined over item subsets (ground size num_items).
WelfareLift LiftWelfare(std::vector<OraclePtr> local_oracles,
                        std::size_t num_items);

// ---------------------------------------------------------------------------
// Data harvesting with one candidate list per agent. Candidate lists may
// share locations; the ground set is the disjoint union of (agent, location)
// pairs, flattened agent by agent.
struct HarvestingInstance {
  std::vector<Point> data;
  Point phantom;
  std::vector<std::vector<Point>> agent_candidates;
  std::vector<std::size_t> kappas;
};

struct HarvestingProblem {
  ExemplarInstance exemplar;
  PartitionMatroid matroid;
};

HarvestingProblem BuildHarvestingProblem(const HarvestingInstance& inst);

}  // namespace submodular

#endif  // SUBMODULAR_FUNCTIONS_H_
