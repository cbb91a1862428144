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

#include "submodular/functions.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace submodular {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Loss over an explicit list of exemplar rows, where dist_rows[k][d] is the
// dissimilarity from exemplar k to datum d.
double LossOverRows(const std::vector<const double*>& rows,
                    std::size_t num_data, ExemplarLossMode mode) {
  if (rows.empty())
    throw std::invalid_argument("exemplar loss of an empty set");
  if (mode == ExemplarLossMode::kMedoid) {
    double total = 0.0;
    for (std::size_t d = 0; d < num_data; ++d) {
      double best = kInf;
      for (const double* row : rows) best = std::min(best, row[d]);
      total += best;
    }
    return total;
  }
  double total = 0.0;
  for (const double* row : rows) {
    total += *std::min_element(row, row + num_data);
  }
  return total / static_cast<double>(rows.size());
}

}  // namespace

double EuclideanDistance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void ValidateExemplarInstance(const ExemplarInstance& inst) {
  if (inst.candidates.empty()) {
    throw std::invalid_argument("exemplar instance needs candidates");
  }
  if (inst.data.empty()) {
    throw std::invalid_argument("exemplar instance needs data points");
  }
  if (!inst.dist) throw std::invalid_argument("exemplar instance needs dist");
}

ExemplarOracle::ExemplarOracle(ExemplarInstance inst, ExemplarLossMode mode)
    : inst_(std::move(inst)), mode_(mode) {
  ValidateExemplarInstance(inst_);
  const std::size_t m = inst_.data.size();
  cand_to_data_.resize(inst_.candidates.size() * m);
  for (std::size_t p = 0; p < inst_.candidates.size(); ++p) {
    for (std::size_t d = 0; d < m; ++d) {
      const double v = inst_.dist(inst_.candidates[p], inst_.data[d]);
      if (!(v >= 0.0)) throw std::invalid_argument("negative dissimilarity");
      cand_to_data_[p * m + d] = v;
    }
  }
  phantom_to_data_.resize(m);
  for (std::size_t d = 0; d < m; ++d) {
    phantom_to_data_[d] = inst_.dist(inst_.phantom, inst_.data[d]);
    if (!(phantom_to_data_[d] >= 0.0)) {
      throw std::invalid_argument("negative dissimilarity");
    }
  }
  phantom_loss_ = LossOverRows({phantom_to_data_.data()}, m, mode_);
}

double ExemplarOracle::Evaluate(const Subset& s) const {
  if (s.width() != ground_size()) {
    throw std::invalid_argument("exemplar oracle: subset width mismatch");
  }
  const std::size_t m = inst_.data.size();
  std::vector<const double*> rows{phantom_to_data_.data()};
  s.ForEach([&](ElementId p) { rows.push_back(&cand_to_data_[p * m]); });
  return phantom_loss_ - LossOverRows(rows, m, mode_);
}

std::optional<double> ExemplarOracle::value_upper_bound() const {
  if (mode_ == ExemplarLossMode::kMedoid) return phantom_loss_;
  return std::nullopt;
}

double ExemplarLoss(const ExemplarInstance& inst, const Subset& r,
                    ExemplarLossMode mode) {
  ValidateExemplarInstance(inst);
  if (r.width() != inst.candidates.size()) {
    throw std::invalid_argument("exemplar loss: subset width mismatch");
  }
  if (r.Empty()) throw std::invalid_argument("exemplar loss of an empty set");
  const std::size_t m = inst.data.size();
  std::vector<std::vector<double>> table;
  r.ForEach([&](ElementId p) {
    std::vector<double> row(m);
    for (std::size_t d = 0; d < m; ++d) {
      row[d] = inst.dist(inst.candidates[p], inst.data[d]);
    }
    table.push_back(std::move(row));
  });
  std::vector<const double*> rows;
  for (const auto& row : table) rows.push_back(row.data());
  return LossOverRows(rows, m, mode);
}

double ExemplarUtility(const ExemplarInstance& inst, const Subset& r,
                       ExemplarLossMode mode) {
  return ExemplarOracle(inst, mode).Evaluate(r);
}

// ---------------------------------------------------------------------------

double CoverageValue(const CoverageInstance& inst, const Subset& s) {
  if (s.width() != inst.covers.size()) {
    throw std::invalid_argument("coverage: subset width mismatch");
  }
  std::vector<char> covered(inst.item_weights.size(), 0);
  s.ForEach([&](ElementId p) {
    for (std::size_t item : inst.covers[p]) covered.at(item) = 1;
  });
  double total = 0.0;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) total += inst.item_weights[i];
  }
  return total;
}

CoverageOracle::CoverageOracle(CoverageInstance inst) : inst_(std::move(inst)) {
  if (inst_.covers.empty())
    throw std::invalid_argument("coverage: no elements");
  for (double w : inst_.item_weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("coverage: negative weight");
    total_ += w;
  }
  words_ = (inst_.item_weights.size() + 63) / 64;
  cover_bits_.assign(inst_.covers.size() * words_, 0);
  for (std::size_t p = 0; p < inst_.covers.size(); ++p) {
    for (std::size_t item : inst_.covers[p]) {
      if (item >= inst_.item_weights.size()) {
        throw std::invalid_argument("coverage: item index out of range");
      }
      cover_bits_[p * words_ + item / 64] |= std::uint64_t{1} << (item % 64);
    }
  }
}

double CoverageOracle::Evaluate(const Subset& s) const {
  if (s.width() != ground_size()) {
    throw std::invalid_argument("coverage: subset width mismatch");
  }
  std::vector<std::uint64_t> covered(words_, 0);
  s.ForEach([&](ElementId p) {
    for (std::size_t w = 0; w < words_; ++w) {
      covered[w] |= cover_bits_[p * words_ + w];
    }
  });
  // Summed in item order so the result does not depend on S's layout.
  double total = 0.0;
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = covered[w]; bits != 0; bits &= bits - 1) {
      total += inst_.item_weights[w * 64 + __builtin_ctzll(bits)];
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

std::size_t MatrixRank(std::vector<std::vector<double>> rows,
                       double tolerance) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  double scale = 0.0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) return 0;
  const double threshold = tolerance * scale;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
    }
    if (std::abs(rows[pivot][col]) <= threshold) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const double factor = rows[r][col] / rows[rank][col];
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

double RankValue(const RankInstance& inst, const Subset& measured) {
  if (measured.width() != inst.measurement_rows.size()) {
    throw std::invalid_argument("rank: subset width mismatch");
  }
  std::vector<std::vector<double>> rows = inst.base_rows;
  measured.ForEach(
      [&](ElementId l) { rows.push_back(inst.measurement_rows[l]); });
  return static_cast<double>(MatrixRank(std::move(rows)));
}

RankInstance TrafficRankInstance(
    std::size_t num_nodes,
    const std::vector<std::pair<std::size_t, std::size_t>>& links,
    const std::vector<std::size_t>& interior) {
  RankInstance inst;
  inst.num_links = links.size();
  for (std::size_t v : interior) {
    if (v >= num_nodes) throw std::invalid_argument("rank: node out of range");
    std::vector<double> row(links.size(), 0.0);
    for (std::size_t l = 0; l < links.size(); ++l) {
      if (links[l].second == v) row[l] += 1.0;
      if (links[l].first == v) row[l] -= 1.0;
    }
    inst.base_rows.push_back(std::move(row));
  }
  for (std::size_t l = 0; l < links.size(); ++l) {
    if (links[l].first >= num_nodes || links[l].second >= num_nodes) {
      throw std::invalid_argument("rank: link endpoint out of range");
    }
    std::vector<double> row(links.size(), 0.0);
    row[l] = 1.0;
    inst.measurement_rows.push_back(std::move(row));
  }
  return inst;
}

RankOracle::RankOracle(RankInstance inst) : inst_(std::move(inst)) {
  if (inst_.measurement_rows.empty()) {
    throw std::invalid_argument("rank: no candidate links");
  }
  for (const auto& rows : {inst_.base_rows, inst_.measurement_rows}) {
    for (const auto& row : rows) {
      if (row.size() != inst_.num_links) {
        throw std::invalid_argument("rank: every row needs one entry per link");
      }
    }
  }
  base_rank_ = RankValue(inst_, Subset(inst_.measurement_rows.size()));
}

double RankOracle::Evaluate(const Subset& s) const {
  return RankValue(inst_, s) - base_rank_;
}

std::optional<double> RankOracle::value_upper_bound() const {
  return std::min(static_cast<double>(inst_.num_links) - base_rank_,
                  static_cast<double>(ground_size()));
}

// ---------------------------------------------------------------------------

ModularOracle::ModularOracle(ModularInstance inst) : inst_(std::move(inst)) {
  if (inst_.weights.empty())
    throw std::invalid_argument("modular: no elements");
  for (double w : inst_.weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("modular: negative weight");
  }
}

double ModularOracle::Evaluate(const Subset& s) const {
  if (s.width() != ground_size()) {
    throw std::invalid_argument("modular: subset width mismatch");
  }
  double total = 0.0;
  s.ForEach([&](ElementId p) { total += inst_.weights[p]; });
  return total;
}

std::optional<double> ModularOracle::value_upper_bound() const {
  double total = 0.0;
  for (double w : inst_.weights) total += w;
  return total;
}

// ---------------------------------------------------------------------------

namespace {

class LiftedWelfareOracle : public ValueOracle {
 public:
  LiftedWelfareOracle(std::vector<OraclePtr> locals, std::size_t num_items)
      : locals_(std::move(locals)), num_items_(num_items) {}

  double Evaluate(const Subset& s) const override {
    const std::size_t agents = locals_.size();
    std::vector<Subset> bundles(agents, Subset(num_items_));
    s.ForEach([&](ElementId e) { bundles[e % agents].Insert(e / agents); });
    double total = 0.0;
    for (std::size_t j = 0; j < agents; ++j) {
      total += locals_[j]->Evaluate(bundles[j]);
    }
    return total;
  }
  std::size_t ground_size() const override {
    return num_items_ * locals_.size();
  }
  std::string name() const override { return "welfare"; }
  std::optional<double> value_upper_bound() const override {
    double total = 0.0;
    for (const auto& f : locals_) {
      if (auto b = f->value_upper_bound()) {
        total += *b;
      } else {
        return std::nullopt;
      }
    }
    return total;
  }

 private:
  std::vector<OraclePtr> locals_;
  std::size_t num_items_;
};

PartitionMatroid WelfareMatroid(std::size_t num_items, std::size_t num_agents) {
  std::vector<std::vector<ElementId>> blocks(num_items);
  for (std::size_t i = 0; i < num_items; ++i) {
    for (std::size_t j = 0; j < num_agents; ++j) {
      blocks[i].push_back(i * num_agents + j);
    }
  }
  return PartitionMatroid(num_items * num_agents, std::move(blocks),
                          std::vector<std::size_t>(num_items, 1));
}

}  // namespace

WelfareLift LiftWelfare(std::vector<OraclePtr> local_oracles,
                        std::size_t num_items) {
  if (local_oracles.empty()) throw std::invalid_argument("welfare: no agents");
  if (num_items == 0) throw std::invalid_argument("welfare: no items");
  for (const auto& f : local_oracles) {
    if (!f || f->ground_size() != num_items) {
      throw std::invalid_argument(
          "welfare: local oracle must range over items");
    }
  }
  const std::size_t agents = local_oracles.size();
  return WelfareLift{
      .num_items = num_items,
      .num_agents = agents,
      .oracle = std::make_shared<LiftedWelfareOracle>(std::move(local_oracles),
                                                      num_items),
      .matroid = WelfareMatroid(num_items, agents),
  };
}

HarvestingProblem BuildHarvestingProblem(const HarvestingInstance& inst) {
  if (inst.agent_candidates.empty()) {
    throw std::invalid_argument("harvesting: no agents");
  }
  if (inst.kappas.size() != inst.agent_candidates.size()) {
    throw std::invalid_argument("harvesting: one budget per agent");
  }
  ExemplarInstance exemplar{.data = inst.data, .phantom = inst.phantom};
  std::vector<std::vector<ElementId>> blocks;
  for (const auto& candidates : inst.agent_candidates) {
    std::vector<ElementId> block;
    for (const Point& b : candidates) {
      block.push_back(exemplar.candidates.size());
      exemplar.candidates.push_back(b);
    }
    blocks.push_back(std::move(block));
  }
  ValidateExemplarInstance(exemplar);
  const std::size_t n = exemplar.candidates.size();
  return HarvestingProblem{
      .exemplar = std::move(exemplar),
      .matroid = PartitionMatroid(n, std::move(blocks), inst.kappas),
  };
}

}  // namespace submodular
