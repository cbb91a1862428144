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

#include "submodular/instance_io.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"
#include "submodular/generators.h"

namespace submodular {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw ParseError((path.empty() ? std::string("<root>") : path) + ": " +
                   message);
}

std::string Child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

Json ParseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void ExpectObject(const Json& j, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) Fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) Fail(Child(path, key), "unknown field");
  }
}

const Json& Required(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) Fail(Child(path, key), "missing required field");
  return *it;
}

double ReadNumber(const Json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(path, "expected a finite number");
  return v;
}

std::size_t ReadIndex(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    Fail(path, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::uint64_t ReadU64(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() &&
      !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    Fail(path, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::string ReadString(const Json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a string");
  return j.get<std::string>();
}

template <typename T, typename F>
std::vector<T> ReadArray(const Json& j, const std::string& path, F read) {
  if (!j.is_array()) Fail(path, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read(j[i], Index(path, i)));
  }
  return out;
}

std::vector<double> ReadNumbers(const Json& j, const std::string& path) {
  return ReadArray<double>(j, path, ReadNumber);
}

std::vector<std::size_t> ReadIndices(const Json& j, const std::string& path) {
  return ReadArray<std::size_t>(j, path, ReadIndex);
}

Point ReadPoint(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) Fail(path, "expected [x, y]");
  return {ReadNumber(j[0], Index(path, 0)), ReadNumber(j[1], Index(path, 1))};
}

std::vector<Point> ReadPoints(const Json& j, const std::string& path) {
  return ReadArray<Point>(j, path, ReadPoint);
}

std::pair<std::size_t, std::size_t> ReadPair(const Json& j,
                                             const std::string& path) {
  if (!j.is_array() || j.size() != 2) Fail(path, "expected [a, b]");
  return {ReadIndex(j[0], Index(path, 0)), ReadIndex(j[1], Index(path, 1))};
}

std::vector<std::pair<std::size_t, std::size_t>> ReadPairs(
    const Json& j, const std::string& path) {
  return ReadArray<std::pair<std::size_t, std::size_t>>(j, path, ReadPair);
}

std::vector<std::vector<std::size_t>> ReadIndexLists(const Json& j,
                                                     const std::string& path) {
  return ReadArray<std::vector<std::size_t>>(j, path, ReadIndices);
}

ExemplarLossMode ReadLoss(const Json& j, const std::string& path) {
  const std::string s = ReadString(j, path);
  if (s == "medoid") return ExemplarLossMode::kMedoid;
  if (s == "chosen_average") return ExemplarLossMode::kChosenAverage;
  Fail(path, "expected \"medoid\" or \"chosen_average\"");
}

std::string LossName(ExemplarLossMode mode) {
  return mode == ExemplarLossMode::kMedoid ? "medoid" : "chosen_average";
}

CoverageSpec ReadCoverage(const Json& j, const std::string& path) {
  ExpectObject(j, path, {"kind", "item_weights", "covers"});
  return {
      .item_weights = ReadNumbers(Required(j, path, "item_weights"),
                                  Child(path, "item_weights")),
      .covers =
          ReadIndexLists(Required(j, path, "covers"), Child(path, "covers")),
  };
}

ExemplarSpec ReadExemplar(const Json& j, const std::string& path) {
  ExpectObject(j, path, {"kind", "candidates", "data", "phantom", "loss"});
  ExemplarSpec spec{
      .candidates = ReadPoints(Required(j, path, "candidates"),
                               Child(path, "candidates")),
      .data = ReadPoints(Required(j, path, "data"), Child(path, "data")),
      .phantom =
          ReadPoint(Required(j, path, "phantom"), Child(path, "phantom")),
  };
  if (j.contains("loss")) spec.loss = ReadLoss(j["loss"], Child(path, "loss"));
  return spec;
}

RankSpec ReadRank(const Json& j, const std::string& path) {
  ExpectObject(j, path, {"kind", "num_nodes", "links", "interior"});
  return {
      .num_nodes =
          ReadIndex(Required(j, path, "num_nodes"), Child(path, "num_nodes")),
      .links = ReadPairs(Required(j, path, "links"), Child(path, "links")),
      .interior =
          ReadIndices(Required(j, path, "interior"), Child(path, "interior")),
  };
}

ModularSpec ReadModular(const Json& j, const std::string& path) {
  ExpectObject(j, path, {"kind", "weights"});
  return {.weights = ReadNumbers(Required(j, path, "weights"),
                                 Child(path, "weights"))};
}

TableSpec ReadTable(const Json& j, const std::string& path) {
  ExpectObject(j, path, {"kind", "n", "values"});
  return {
      .n = ReadIndex(Required(j, path, "n"), Child(path, "n")),
      .values = ReadNumbers(Required(j, path, "values"), Child(path, "values")),
  };
}

LocalFunctionSpec ReadLocal(const Json& j, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  const std::string kind =
      ReadString(Required(j, path, "kind"), Child(path, "kind"));
  if (kind == "coverage") return ReadCoverage(j, path);
  if (kind == "exemplar") return ReadExemplar(j, path);
  if (kind == "modular") return ReadModular(j, path);
  if (kind == "table") return ReadTable(j, path);
  Fail(Child(path, "kind"), "unsupported local function kind \"" + kind + "\"");
}

WelfareSpec ReadWelfare(const Json& j, const std::string& path) {
  ExpectObject(j, path, {"kind", "num_items", "agents"});
  return {
      .num_items =
          ReadIndex(Required(j, path, "num_items"), Child(path, "num_items")),
      .agents = ReadArray<LocalFunctionSpec>(Required(j, path, "agents"),
                                             Child(path, "agents"), ReadLocal),
  };
}

HarvestingAgentSpec ReadHarvestingAgent(const Json& j,
                                        const std::string& path) {
  ExpectObject(j, path, {"candidates", "kappa"});
  return {
      .candidates = ReadPoints(Required(j, path, "candidates"),
                               Child(path, "candidates")),
      .kappa = ReadIndex(Required(j, path, "kappa"), Child(path, "kappa")),
  };
}

HarvestingSpec ReadHarvesting(const Json& j, const std::string& path) {
  ExpectObject(j, path, {"kind", "data", "phantom", "agents"});
  return {
      .data = ReadPoints(Required(j, path, "data"), Child(path, "data")),
      .phantom =
          ReadPoint(Required(j, path, "phantom"), Child(path, "phantom")),
      .agents = ReadArray<HarvestingAgentSpec>(Required(j, path, "agents"),
                                               Child(path, "agents"),
                                               ReadHarvestingAgent),
  };
}

FunctionSpec ReadFunction(const Json& j, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  const std::string kind =
      ReadString(Required(j, path, "kind"), Child(path, "kind"));
  if (kind == "coverage") return ReadCoverage(j, path);
  if (kind == "exemplar") return ReadExemplar(j, path);
  if (kind == "rank") return ReadRank(j, path);
  if (kind == "modular") return ReadModular(j, path);
  if (kind == "table") return ReadTable(j, path);
  if (kind == "welfare") return ReadWelfare(j, path);
  if (kind == "harvesting") return ReadHarvesting(j, path);
  Fail(Child(path, "kind"), "unknown function kind \"" + kind + "\"");
}

ConstraintSpec ReadConstraint(const Json& j, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  const std::string kind =
      ReadString(Required(j, path, "kind"), Child(path, "kind"));
  if (kind == "uniform") {
    ExpectObject(j, path, {"kind", "kappa"});
    return UniformSpec{
        .kappa = ReadIndex(Required(j, path, "kappa"), Child(path, "kappa"))};
  }
  if (kind == "partition") {
    ExpectObject(j, path, {"kind", "blocks", "kappas"});
    return PartitionSpec{
        .blocks =
            ReadIndexLists(Required(j, path, "blocks"), Child(path, "blocks")),
        .kappas =
            ReadIndices(Required(j, path, "kappas"), Child(path, "kappas")),
    };
  }
  if (kind == "explicit") {
    ExpectObject(j, path, {"kind", "independent_sets"});
    return ExplicitSpec{.independent_sets = ReadIndexLists(
                            Required(j, path, "independent_sets"),
                            Child(path, "independent_sets"))};
  }
  Fail(Child(path, "kind"), "unknown constraint kind \"" + kind + "\"");
}

bool ImpliesConstraint(const FunctionSpec& f) {
  return std::holds_alternative<WelfareSpec>(f) ||
         std::holds_alternative<HarvestingSpec>(f);
}

InstanceSpec ReadInstance(const Json& j, const std::string& path) {
  ExpectObject(j, path, {"name", "function", "constraint"});
  InstanceSpec spec;
  if (j.contains("name"))
    spec.name = ReadString(j["name"], Child(path, "name"));
  spec.function =
      ReadFunction(Required(j, path, "function"), Child(path, "function"));
  const bool implied = ImpliesConstraint(spec.function);
  if (j.contains("constraint")) {
    if (implied) {
      Fail(Child(path, "constraint"),
           "welfare and harvesting instances define their own constraint");
    }
    spec.constraint =
        ReadConstraint(j["constraint"], Child(path, "constraint"));
  } else if (!implied) {
    Fail(Child(path, "constraint"), "missing required field");
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Serialization, keys in the order they are read.

Json PointJson(const Point& p) { return Json::array({p.x, p.y}); }

Json PointsJson(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const Point& p : points) out.push_back(PointJson(p));
  return out;
}

Json PairsJson(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

struct FunctionWriter {
  Json operator()(const CoverageSpec& s) const {
    Json j;
    j["kind"] = "coverage";
    j["item_weights"] = s.item_weights;
    j["covers"] = s.covers;
    return j;
  }
  Json operator()(const ExemplarSpec& s) const {
    Json j;
    j["kind"] = "exemplar";
    j["candidates"] = PointsJson(s.candidates);
    j["data"] = PointsJson(s.data);
    j["phantom"] = PointJson(s.phantom);
    j["loss"] = LossName(s.loss);
    return j;
  }
  Json operator()(const RankSpec& s) const {
    Json j;
    j["kind"] = "rank";
    j["num_nodes"] = s.num_nodes;
    j["links"] = PairsJson(s.links);
    j["interior"] = s.interior;
    return j;
  }
  Json operator()(const ModularSpec& s) const {
    Json j;
    j["kind"] = "modular";
    j["weights"] = s.weights;
    return j;
  }
  Json operator()(const TableSpec& s) const {
    Json j;
    j["kind"] = "table";
    j["n"] = s.n;
    j["values"] = s.values;
    return j;
  }
  Json operator()(const WelfareSpec& s) const {
    Json j;
    j["kind"] = "welfare";
    j["num_items"] = s.num_items;
    j["agents"] = Json::array();
    for (const LocalFunctionSpec& local : s.agents) {
      j["agents"].push_back(std::visit(*this, local));
    }
    return j;
  }
  Json operator()(const HarvestingSpec& s) const {
    Json j;
    j["kind"] = "harvesting";
    j["data"] = PointsJson(s.data);
    j["phantom"] = PointJson(s.phantom);
    j["agents"] = Json::array();
    for (const HarvestingAgentSpec& agent : s.agents) {
      Json a;
      a["candidates"] = PointsJson(agent.candidates);
      a["kappa"] = agent.kappa;
      j["agents"].push_back(a);
    }
    return j;
  }
};

struct ConstraintWriter {
  Json operator()(const UniformSpec& s) const {
    Json j;
    j["kind"] = "uniform";
    j["kappa"] = s.kappa;
    return j;
  }
  Json operator()(const PartitionSpec& s) const {
    Json j;
    j["kind"] = "partition";
    j["blocks"] = s.blocks;
    j["kappas"] = s.kappas;
    return j;
  }
  Json operator()(const ExplicitSpec& s) const {
    Json j;
    j["kind"] = "explicit";
    j["independent_sets"] = s.independent_sets;
    return j;
  }
};

// ---------------------------------------------------------------------------
// Building oracles.

CoverageInstance ToCoverage(const CoverageSpec& s, const std::string& path) {
  for (std::size_t i = 0; i < s.item_weights.size(); ++i) {
    if (s.item_weights[i] < 0.0) {
      Fail(Index(Child(path, "item_weights"), i), "weights must be >= 0");
    }
  }
  for (std::size_t p = 0; p < s.covers.size(); ++p) {
    for (std::size_t k = 0; k < s.covers[p].size(); ++k) {
      if (s.covers[p][k] >= s.item_weights.size()) {
        Fail(Index(Index(Child(path, "covers"), p), k),
             "item index out of range");
      }
    }
  }
  if (s.covers.empty())
    Fail(Child(path, "covers"), "need at least one element");
  return {.item_weights = s.item_weights, .covers = s.covers};
}

ExemplarInstance ToExemplar(const ExemplarSpec& s, const std::string& path) {
  if (s.candidates.empty()) Fail(Child(path, "candidates"), "must be nonempty");
  if (s.data.empty()) Fail(Child(path, "data"), "must be nonempty");
  return {.candidates = s.candidates, .data = s.data, .phantom = s.phantom};
}

OraclePtr BuildLocal(const LocalFunctionSpec& spec, const std::string& path);

OraclePtr BuildTable(const TableSpec& s, const std::string& path) {
  if (s.n == 0 || s.n > 20) Fail(Child(path, "n"), "must lie in [1, 20]");
  if (s.values.size() != (std::size_t{1} << s.n)) {
    Fail(Child(path, "values"),
         "expected 2^n = " + std::to_string(std::size_t{1} << s.n) + " values");
  }
  return std::make_shared<TableOracle>(s.n, s.values, "table");
}

OraclePtr BuildModular(const ModularSpec& s, const std::string& path) {
  if (s.weights.empty()) Fail(Child(path, "weights"), "must be nonempty");
  return std::make_shared<ModularOracle>(ModularInstance{s.weights});
}

OraclePtr BuildLocal(const LocalFunctionSpec& spec, const std::string& path) {
  if (const auto* s = std::get_if<CoverageSpec>(&spec)) {
    return std::make_shared<CoverageOracle>(ToCoverage(*s, path));
  }
  if (const auto* s = std::get_if<ExemplarSpec>(&spec)) {
    return std::make_shared<ExemplarOracle>(ToExemplar(*s, path), s->loss);
  }
  if (const auto* s = std::get_if<ModularSpec>(&spec)) {
    return BuildModular(*s, path);
  }
  return BuildTable(std::get<TableSpec>(spec), path);
}

void SetConstraint(const ConstraintSpec& c, std::size_t n, Problem& problem) {
  const std::string path = "constraint";
  try {
    if (const auto* u = std::get_if<UniformSpec>(&c)) {
      if (u->kappa < 1 || u->kappa > n) {
        Fail(Child(path, "kappa"),
             "need 1 <= kappa <= n = " + std::to_string(n));
      }
      const UniformMatroid m(n, u->kappa);
      problem.constraint = std::make_shared<UniformMatroid>(m);
      problem.partition = PartitionMatroid::FromUniform(m);
      problem.uniform = true;
    } else if (const auto* p = std::get_if<PartitionSpec>(&c)) {
      if (p->kappas.size() != p->blocks.size()) {
        Fail(Child(path, "kappas"), "need one budget per block");
      }
      for (std::size_t i = 0; i < p->blocks.size(); ++i) {
        for (std::size_t k = 0; k < p->blocks[i].size(); ++k) {
          if (p->blocks[i][k] >= n) {
            Fail(Index(Index(Child(path, "blocks"), i), k),
                 "element out of range");
          }
        }
        if (p->kappas[i] < 1 || p->kappas[i] > p->blocks[i].size()) {
          Fail(Index(Child(path, "kappas"), i),
               "need 1 <= kappa_i <= block size");
        }
      }
      auto m = std::make_shared<PartitionMatroid>(n, p->blocks, p->kappas);
      problem.partition = *m;
      problem.constraint = m;
    } else {
      const auto& e = std::get<ExplicitSpec>(c);
      std::vector<Subset> sets;
      for (std::size_t i = 0; i < e.independent_sets.size(); ++i) {
        Subset s(n);
        for (ElementId x : e.independent_sets[i]) {
          if (x >= n) {
            Fail(Index(Child(path, "independent_sets"), i),
                 "element out of range");
          }
          s.Insert(x);
        }
        sets.push_back(s);
      }
      problem.constraint = std::make_shared<ExplicitIndependence>(n, sets);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    Fail(path, e.what());
  }
}

}  // namespace

std::string Problem::KappaLabel() const {
  if (!partition) return "";
  std::string label;
  for (std::size_t i = 0; i < partition->num_blocks(); ++i) {
    if (i > 0) label += "|";
    label += std::to_string(partition->kappa(i));
  }
  return label;
}

InstanceSpec ParseInstance(const std::string& text) {
  return ReadInstance(ParseText(text), "");
}

InstanceSpec ParseInstanceFile(const std::string& path) {
  try {
    return ParseInstance(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string SerializeInstance(const InstanceSpec& spec) {
  Json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["function"] = std::visit(FunctionWriter{}, spec.function);
  if (spec.constraint) {
    j["constraint"] = std::visit(ConstraintWriter{}, *spec.constraint);
  }
  return j.dump(2) + "\n";
}

Problem BuildProblem(const InstanceSpec& spec) {
  Problem problem;
  problem.name = spec.name.empty() ? "instance" : spec.name;
  const std::string path = "function";
  try {
    if (const auto* w = std::get_if<WelfareSpec>(&spec.function)) {
      if (w->num_items == 0) Fail(Child(path, "num_items"), "must be >= 1");
      if (w->agents.empty()) Fail(Child(path, "agents"), "need an agent");
      std::vector<OraclePtr> locals;
      for (std::size_t a = 0; a < w->agents.size(); ++a) {
        const std::string agent_path = Index(Child(path, "agents"), a);
        OraclePtr local = BuildLocal(w->agents[a], agent_path);
        if (local->ground_size() != w->num_items) {
          Fail(agent_path, "local function must range over num_items items");
        }
        locals.push_back(std::move(local));
      }
      WelfareLift lift = LiftWelfare(std::move(locals), w->num_items);
      problem.oracle = lift.oracle;
      problem.constraint = std::make_shared<PartitionMatroid>(lift.matroid);
      problem.partition = lift.matroid;
      return problem;
    }
    if (const auto* h = std::get_if<HarvestingSpec>(&spec.function)) {
      HarvestingInstance inst{.data = h->data, .phantom = h->phantom};
      for (const HarvestingAgentSpec& agent : h->agents) {
        inst.agent_candidates.push_back(agent.candidates);
        inst.kappas.push_back(agent.kappa);
      }
      HarvestingProblem built = BuildHarvestingProblem(inst);
      problem.oracle = std::make_shared<ExemplarOracle>(built.exemplar);
      problem.constraint = std::make_shared<PartitionMatroid>(built.matroid);
      problem.partition = built.matroid;
      return problem;
    }
    if (const auto* r = std::get_if<RankSpec>(&spec.function)) {
      if (r->links.empty()) Fail(Child(path, "links"), "need a link");
      for (std::size_t i = 0; i < r->links.size(); ++i) {
        if (r->links[i].first >= r->num_nodes ||
            r->links[i].second >= r->num_nodes) {
          Fail(Index(Child(path, "links"), i), "node out of range");
        }
      }
      for (std::size_t i = 0; i < r->interior.size(); ++i) {
        if (r->interior[i] >= r->num_nodes) {
          Fail(Index(Child(path, "interior"), i), "node out of range");
        }
      }
      problem.oracle = std::make_shared<RankOracle>(
          TrafficRankInstance(r->num_nodes, r->links, r->interior));
    } else if (const auto* m = std::get_if<ModularSpec>(&spec.function)) {
      problem.oracle = BuildModular(*m, path);
    } else if (const auto* c = std::get_if<CoverageSpec>(&spec.function)) {
      problem.oracle = BuildLocal(*c, path);
    } else if (const auto* e = std::get_if<ExemplarSpec>(&spec.function)) {
      problem.oracle = BuildLocal(*e, path);
    } else {
      problem.oracle = BuildTable(std::get<TableSpec>(spec.function), path);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    Fail(path, e.what());
  }
  SetConstraint(*spec.constraint, problem.oracle->ground_size(), problem);
  return problem;
}

Family ParseFamily(const std::string& name) {
  if (name == "coverage") return Family::kCoverage;
  if (name == "exemplar") return Family::kExemplar;
  if (name == "rank") return Family::kRank;
  if (name == "modular") return Family::kModular;
  throw ParseError("unknown instance family \"" + name + "\"");
}

std::string FamilyName(Family family) {
  switch (family) {
    case Family::kCoverage:
      return "coverage";
    case Family::kExemplar:
      return "exemplar";
    case Family::kRank:
      return "rank";
    case Family::kModular:
      return "modular";
  }
  return "";
}

FunctionSpec RandomFunctionSpec(Family family, std::size_t n,
                                std::uint64_t seed) {
  switch (family) {
    case Family::kCoverage: {
      CoverageInstance inst = RandomCoverage(n, seed);
      return CoverageSpec{inst.item_weights, inst.covers};
    }
    case Family::kExemplar: {
      ExemplarInstance inst = RandomExemplar(n, seed);
      return ExemplarSpec{inst.candidates, inst.data, inst.phantom};
    }
    case Family::kRank: {
      TrafficTopology t = RandomTrafficTopology(n, seed);
      return RankSpec{t.num_nodes, t.links, t.interior};
    }
    case Family::kModular:
      return ModularSpec{RandomModular(n, seed).weights};
  }
  throw std::logic_error("unhandled family");
}

// ---------------------------------------------------------------------------

ScenarioSpec ParseScenario(const std::string& text,
                           const std::string& base_dir) {
  const Json j = ParseText(text);
  ExpectObject(j, "",
               {"instance", "instance_path", "topology", "schedule", "drops",
                "sweep", "seed"});
  ScenarioSpec spec;
  if (j.contains("instance") == j.contains("instance_path")) {
    Fail("instance", "give exactly one of \"instance\" and \"instance_path\"");
  }
  if (j.contains("instance")) {
    spec.instance = ReadInstance(j["instance"], "instance");
  } else {
    const std::filesystem::path rel =
        ReadString(j["instance_path"], "instance_path");
    spec.instance = ParseInstanceFile(
        (rel.is_absolute() ? rel : std::filesystem::path(base_dir) / rel)
            .string());
  }

  const Json& topology = Required(j, "", "topology");
  ExpectObject(topology, "topology", {"agents", "edges"});
  spec.num_agents =
      ReadIndex(Required(topology, "topology", "agents"), "topology.agents");
  if (spec.num_agents == 0) Fail("topology.agents", "must be >= 1");
  spec.edges =
      ReadPairs(Required(topology, "topology", "edges"), "topology.edges");
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& [a, b] = spec.edges[i];
    if (a >= spec.num_agents || b >= spec.num_agents) {
      Fail(Index("topology.edges", i), "agent out of range");
    }
    if (a == b) Fail(Index("topology.edges", i), "self loops are not allowed");
  }

  if (j.contains("schedule")) {
    spec.schedule = ReadIndices(j["schedule"], "schedule");
  }
  if (j.contains("drops")) {
    const Json& drops = j["drops"];
    if (!drops.is_object()) Fail("drops", "expected an object");
    const std::string mode =
        ReadString(Required(drops, "drops", "mode"), "drops.mode");
    if (mode == "none") {
      ExpectObject(drops, "drops", {"mode"});
    } else if (mode == "bernoulli") {
      ExpectObject(drops, "drops", {"mode", "p_success"});
      spec.drop_mode = ScenarioDropMode::kBernoulli;
      spec.p_success =
          ReadNumber(Required(drops, "drops", "p_success"), "drops.p_success");
      if (spec.p_success < 0.0 || spec.p_success > 1.0) {
        Fail("drops.p_success", "must lie in [0, 1]");
      }
    } else if (mode == "failed_hops") {
      ExpectObject(drops, "drops", {"mode", "hops"});
      spec.drop_mode = ScenarioDropMode::kFailedHops;
      spec.failed_hops =
          ReadIndices(Required(drops, "drops", "hops"), "drops.hops");
    } else {
      Fail("drops.mode", "expected none, bernoulli or failed_hops");
    }
  }
  if (j.contains("sweep")) {
    const Json& sweep = j["sweep"];
    ExpectObject(sweep, "sweep", {"p_grid", "trials"});
    spec.p_grid =
        ReadNumbers(Required(sweep, "sweep", "p_grid"), "sweep.p_grid");
    for (std::size_t i = 0; i < spec.p_grid->size(); ++i) {
      const double p = (*spec.p_grid)[i];
      if (p < 0.0 || p > 1.0)
        Fail(Index("sweep.p_grid", i), "must lie in [0, 1]");
    }
    if (spec.p_grid->empty()) Fail("sweep.p_grid", "must be nonempty");
    spec.trials = ReadIndex(Required(sweep, "sweep", "trials"), "sweep.trials");
    if (spec.trials == 0) Fail("sweep.trials", "must be >= 1");
    if (spec.drop_mode == ScenarioDropMode::kBernoulli) {
      Fail("drops",
           "a sweep sets p itself; drop mode must be none or "
           "failed_hops");
    }
  }
  if (j.contains("seed")) spec.seed = ReadU64(j["seed"], "seed");
  return spec;
}

ScenarioSpec ParseScenarioFile(const std::string& path) {
  try {
    return ParseScenario(
        ReadFile(path),
        std::filesystem::path(path).parent_path().string().empty()
            ? "."
            : std::filesystem::path(path).parent_path().string());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SweepConfig ParseSweepConfig(const std::string& text) {
  const Json j = ParseText(text);
  ExpectObject(j, "",
               {"families", "sizes", "kappas", "seeds", "solvers", "constraint",
                "max_blocks", "cg_steps", "cg_samples"});
  SweepConfig config;
  config.families =
      ReadArray<Family>(Required(j, "", "families"), "families",
                        [](const Json& v, const std::string& path) {
                          try {
                            return ParseFamily(ReadString(v, path));
                          } catch (const ParseError& e) {
                            Fail(path, e.what());
                          }
                        });
  config.sizes = ReadIndices(Required(j, "", "sizes"), "sizes");
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    if (config.sizes[i] == 0) Fail(Index("sizes", i), "must be >= 1");
  }
  config.kappas = ReadIndices(Required(j, "", "kappas"), "kappas");
  for (std::size_t i = 0; i < config.kappas.size(); ++i) {
    if (config.kappas[i] == 0) Fail(Index("kappas", i), "must be >= 1");
  }
  config.seeds =
      ReadArray<std::uint64_t>(Required(j, "", "seeds"), "seeds", ReadU64);
  config.solvers =
      ReadArray<std::string>(Required(j, "", "solvers"), "solvers", ReadString);
  for (std::size_t i = 0; i < config.solvers.size(); ++i) {
    const std::string& s = config.solvers[i];
    if (s != "sg" && s != "sg-partition" && s != "lazy" && s != "cg") {
      Fail(Index("solvers", i), "unknown solver \"" + s + "\"");
    }
  }
  if (j.contains("constraint")) {
    config.constraint = ReadString(j["constraint"], "constraint");
    if (config.constraint != "uniform" && config.constraint != "partition") {
      Fail("constraint", "expected \"uniform\" or \"partition\"");
    }
  }
  if (j.contains("max_blocks")) {
    config.max_blocks = ReadIndex(j["max_blocks"], "max_blocks");
    if (config.max_blocks == 0) Fail("max_blocks", "must be >= 1");
  }
  if (j.contains("cg_steps")) {
    config.cg_steps = ReadIndex(j["cg_steps"], "cg_steps");
    if (config.cg_steps == 0) Fail("cg_steps", "must be >= 1");
  }
  if (j.contains("cg_samples")) {
    config.cg_samples = ReadIndex(j["cg_samples"], "cg_samples");
  }
  if (config.families.empty() || config.sizes.empty() ||
      config.kappas.empty() || config.seeds.empty() || config.solvers.empty()) {
    throw ParseError("sweep grid is empty");
  }
  return config;
}

SweepConfig ParseSweepConfigFile(const std::string& path) {
  try {
    return ParseSweepConfig(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace submodular
