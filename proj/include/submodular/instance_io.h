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

#ifndef SUBMODULAR_INSTANCE_IO_H_
#define SUBMODULAR_INSTANCE_IO_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "submodular/functions.h"
#include "submodular/matroid.h"
#include "submodular/value_oracle.h"

namespace submodular {

// Malformed input. The message names the offending field, e.g.
// "function.covers[2][0]: expected a nonnegative integer".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoverageSpec {
  std::vector<double> item_weights;
  std::vector<std::vector<std::size_t>> covers;
  bool operator==(const CoverageSpec&) const = default;
};

struct ExemplarSpec {
  std::vector<Point> candidates;
  std::vector<Point> data;
  Point phantom;
  ExemplarLossMode loss = ExemplarLossMode::kMedoid;
  bool operator==(const ExemplarSpec&) const = default;
};

// Flow identifiability on a directed network; every link is a candidate.
struct RankSpec {
  std::size_t num_nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::vector<std::size_t> interior;
  bool operator==(const RankSpec&) const = default;
};

struct ModularSpec {
  std::vector<double> weights;
  bool operator==(const ModularSpec&) const = default;
};

// Explicit values f(S) indexed by bit mask.
struct TableSpec {
  std::size_t n = 0;
  std::vector<double> values;
  bool operator==(const TableSpec&) const = default;
};

using LocalFunctionSpec =
    std::variant<CoverageSpec, ExemplarSpec, ModularSpec, TableSpec>;

// Items are assigned to at most one agent; agents value their bundles with
// their own local functions over items.
struct WelfareSpec {
  std::size_t num_items = 0;
  std::vector<LocalFunctionSpec> agents;
  bool operator==(const WelfareSpec&) const = default;
};

struct HarvestingAgentSpec {
  std::vector<Point> candidates;
  std::size_t kappa = 1;
  bool operator==(const HarvestingAgentSpec&) const = default;
};

struct HarvestingSpec {
  std::vector<Point> data;
  Point phantom;
  std::vector<HarvestingAgentSpec> agents;
  bool operator==(const HarvestingSpec&) const = default;
};

using FunctionSpec =
    std::variant<CoverageSpec, ExemplarSpec, RankSpec, ModularSpec, TableSpec,
                 WelfareSpec, HarvestingSpec>;

struct UniformSpec {
  std::size_t kappa = 1;
  bool operator==(const UniformSpec&) const = default;
};

struct PartitionSpec {
  std::vector<std::vector<ElementId>> blocks;
  std::vector<std::size_t> kappas;
  bool operator==(const PartitionSpec&) const = default;
};

struct ExplicitSpec {
  std::vector<std::vector<ElementId>> independent_sets;
  bool operator==(const ExplicitSpec&) const = default;
};

using ConstraintSpec = std::variant<UniformSpec, PartitionSpec, ExplicitSpec>;

// Welfare and harvesting functions imply their partition constraint, so
// `constraint` is empty for them and required otherwise.
struct InstanceSpec {
  std::string name;
  FunctionSpec function;
  std::optional<ConstraintSpec> constraint;
  bool operator==(const InstanceSpec&) const = default;
};

// A ready-to-run instance.
struct Problem {
  std::string name;
  OraclePtr oracle;
  std::shared_ptr<const IndependenceOracle> constraint;
  // Set for uniform and partition constraints (uniform as a single block).
  std::optional<PartitionMatroid> partition;
  bool uniform = false;

  std::size_t ground_size() const { return oracle->ground_size(); }
  // "3" for uniform, "2|1|3" for partition, "" otherwise.
  std::string KappaLabel() const;
};

// JSON text or parsed document to spec. Throws ParseError.
InstanceSpec ParseInstance(const std::string& text);
InstanceSpec ParseInstanceFile(const std::string& path);

// Canonical JSON (fixed key order, two-space indent, trailing newline).
std::string SerializeInstance(const InstanceSpec& spec);

// Validates semantics (sizes, ranges) and builds oracles. Throws ParseError.
Problem BuildProblem(const InstanceSpec& spec);

// Random instance families used by sweeps and tests.
enum class Family { kCoverage, kExemplar, kRank, kModular };
Family ParseFamily(const std::string& name);
std::string FamilyName(Family family);
FunctionSpec RandomFunctionSpec(Family family, std::size_t n,
                                std::uint64_t seed);

// ---------------------------------------------------------------------------
// Distributed scenarios.

enum class ScenarioDropMode { kNone, kBernoulli, kFailedHops };

struct ScenarioSpec {
  InstanceSpec instance;
  std::size_t num_agents = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Overrides the computed message sequence. Required for disconnected
  // topologies; hops along non-edges are then always lost.
  std::optional<std::vector<std::size_t>> schedule;
  ScenarioDropMode drop_mode = ScenarioDropMode::kNone;
  double p_success = 1.0;
  std::vector<std::size_t> failed_hops;
  // Present for a Bernoulli sweep: one row per (p, trial).
  std::optional<std::vector<double>> p_grid;
  std::size_t trials = 1;
  std::optional<std::uint64_t> seed;
};

// `base_dir` resolves a relative "instance_path".
ScenarioSpec ParseScenario(const std::string& text,
                           const std::string& base_dir = ".");
ScenarioSpec ParseScenarioFile(const std::string& path);

// ---------------------------------------------------------------------------
// Solver sweeps.

struct SweepConfig {
  std::vector<Family> families;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> kappas;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> solvers;
  // "uniform" or "partition" (kappa is then the per-block maximum).
  std::string constraint = "uniform";
  std::size_t max_blocks = 3;
  std::size_t cg_steps = 50;
  std::size_t cg_samples = 0;
};

SweepConfig ParseSweepConfig(const std::string& text);
SweepConfig ParseSweepConfigFile(const std::string& path);

}  // namespace submodular

#endif  // SUBMODULAR_INSTANCE_IO_H_
