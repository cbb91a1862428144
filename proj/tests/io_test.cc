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

#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include "submodular/instance_io.h"
#include "submodular/properties.h"

namespace submodular {
namespace {

const std::string kData = SUBMAX_TEST_DATA;

std::string ParseFailure(const std::string& text) {
  try {
    BuildProblem(ParseInstance(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceIoTest, BundledInstancesRoundTrip) {
  for (const char* file : {"coverage_small.json", "supermodular_decoy.json",
                           "nonmatroid_decoy.json", "partition_small.json",
                           "path3_instance.json", "welfare_small.json"}) {
    const InstanceSpec spec = ParseInstanceFile(kData + "/" + file);
    const std::string canonical = SerializeInstance(spec);
    EXPECT_EQ(ParseInstance(canonical), spec) << file;
    EXPECT_EQ(SerializeInstance(ParseInstance(canonical)), canonical) << file;
  }
}

TEST(InstanceIoTest, GeneratedFamiliesRoundTrip) {
  for (Family family : {Family::kCoverage, Family::kExemplar, Family::kRank,
                        Family::kModular}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const InstanceSpec spec{
          .name = FamilyName(family) + "-" + std::to_string(seed),
          .function = RandomFunctionSpec(family, 7, seed),
          .constraint = UniformSpec{.kappa = 3}};
      const InstanceSpec back = ParseInstance(SerializeInstance(spec));
      EXPECT_EQ(back, spec);
      const Problem a = BuildProblem(spec);
      const Problem b = BuildProblem(back);
      for (std::uint64_t mask = 0; mask < 128; mask += 5) {
        const Subset s = Subset::FromMask(7, mask);
        EXPECT_EQ(a.oracle->Evaluate(s), b.oracle->Evaluate(s));
      }
    }
  }
}

TEST(InstanceIoTest, BuildsExpectedConstraint) {
  const Problem uniform =
      BuildProblem(ParseInstanceFile(kData + "/coverage_small.json"));
  EXPECT_TRUE(uniform.uniform);
  EXPECT_EQ(uniform.KappaLabel(), "3");
  const Problem partition =
      BuildProblem(ParseInstanceFile(kData + "/partition_small.json"));
  EXPECT_FALSE(partition.uniform);
  EXPECT_EQ(partition.KappaLabel(), "1|1|1");
  const Problem welfare =
      BuildProblem(ParseInstanceFile(kData + "/welfare_small.json"));
  ASSERT_TRUE(welfare.partition.has_value());
  EXPECT_EQ(welfare.partition->num_blocks(), 3u);
  EXPECT_EQ(welfare.ground_size(), 6u);
  const Problem decoy =
      BuildProblem(ParseInstanceFile(kData + "/nonmatroid_decoy.json"));
  EXPECT_FALSE(decoy.partition.has_value());
  EXPECT_FALSE(VerifyMatroidAxioms(*decoy.constraint).holds);
}

TEST(InstanceIoTest, UnknownFieldIsRejected) {
  const std::string message = ParseFailure(R"({
    "name": "x",
    "function": {"kind": "modular", "weights": [1, 2], "wieghts": [3]},
    "constraint": {"kind": "uniform", "kappa": 1}
  })");
  EXPECT_NE(message.find("function.wieghts"), std::string::npos) << message;
}

TEST(InstanceIoTest, CorruptedFileIsRejected) {
  EXPECT_THROW(ParseInstanceFile(kData + "/corrupted.json"), ParseError);
  EXPECT_THROW(ParseInstanceFile(kData + "/does_not_exist.json"), ParseError);
}

TEST(InstanceIoTest, DiagnosticsNameTheField) {
  EXPECT_NE(ParseFailure(R"({"name": "x",
      "function": {"kind": "coverage", "item_weights": [1, 1],
                   "covers": [[0], [1], [-1]]},
      "constraint": {"kind": "uniform", "kappa": 1}})")
                .find("function.covers[2][0]"),
            std::string::npos);
  EXPECT_NE(ParseFailure(R"({"name": "x",
      "function": {"kind": "coverage", "item_weights": [1, 1],
                   "covers": [[0], [5]]},
      "constraint": {"kind": "uniform", "kappa": 1}})")
                .find("function.covers[1][0]"),
            std::string::npos);
  EXPECT_NE(ParseFailure(R"({"name": "x",
      "function": {"kind": "modular", "weights": [1, 2]},
      "constraint": {"kind": "uniform", "kappa": 3}})")
                .find("constraint.kappa"),
            std::string::npos);
  EXPECT_NE(ParseFailure(R"({"name": "x",
      "function": {"kind": "modular", "weights": [1, 2]}})")
                .find("constraint"),
            std::string::npos);
  EXPECT_NE(ParseFailure(R"({"name": "x",
      "function": {"kind": "table", "n": 2, "values": [0, 1, 1]},
      "constraint": {"kind": "uniform", "kappa": 1}})")
                .find("function.values"),
            std::string::npos);
  EXPECT_NE(ParseFailure(R"({"name": "x",
      "function": {"kind": "sphere"},
      "constraint": {"kind": "uniform", "kappa": 1}})")
                .find("function.kind"),
            std::string::npos);
}

TEST(ScenarioIoTest, ParsesBundledScenarios) {
  const ScenarioSpec path = ParseScenarioFile(kData + "/path3_scenario.json");
  EXPECT_EQ(path.num_agents, 3u);
  EXPECT_EQ(path.instance.name, "path3-coverage");
  EXPECT_EQ(path.drop_mode, ScenarioDropMode::kNone);
  const ScenarioSpec star = ParseScenarioFile(kData + "/star4_scenario.json");
  EXPECT_EQ(star.drop_mode, ScenarioDropMode::kBernoulli);
  EXPECT_DOUBLE_EQ(star.p_success, 0.5);
  EXPECT_EQ(star.seed, std::optional<std::uint64_t>(3));
  const ScenarioSpec sweep = ParseScenarioFile(kData + "/path3_sweep.json");
  ASSERT_TRUE(sweep.p_grid.has_value());
  EXPECT_EQ(sweep.p_grid->size(), 5u);
  EXPECT_EQ(sweep.trials, 40u);
}

TEST(ScenarioIoTest, RejectsBadScenarios) {
  const std::string instance =
      R"("instance_path": ")" + kData + R"(/path3_instance.json")";
  EXPECT_THROW(ParseScenario("{" + instance + R"(,
      "topology": {"agents": 3, "edges": [[0, 3]]}})"),
               ParseError);
  EXPECT_THROW(ParseScenario("{" + instance + R"(,
      "topology": {"agents": 3, "edges": [[0, 1]]},
      "drops": {"mode": "bernoulli", "p_success": 1.5}})"),
               ParseError);
  EXPECT_THROW(ParseScenario("{" + instance + R"(,
      "topology": {"agents": 3, "edges": [[0, 1]]},
      "drops": {"mode": "sometimes"}})"),
               ParseError);
  EXPECT_THROW(ParseScenario(R"({"topology": {"agents": 3, "edges": []}})"),
               ParseError);
}

TEST(SweepConfigIoTest, ParsesAndValidates) {
  const SweepConfig config = ParseSweepConfigFile(kData + "/sweep_small.json");
  EXPECT_EQ(config.seeds.size(), 10u);
  EXPECT_EQ(config.solvers, (std::vector<std::string>{"sg", "lazy"}));
  EXPECT_EQ(config.constraint, "uniform");
  EXPECT_THROW(ParseSweepConfig(R"({"families": ["coverage"], "sizes": [],
      "kappas": [1], "seeds": [0], "solvers": ["sg"]})"),
               ParseError);
  EXPECT_THROW(ParseSweepConfig(R"({"families": ["coverage"], "sizes": [5],
      "kappas": [1], "seeds": [0], "solvers": ["magic"]})"),
               ParseError);
  EXPECT_THROW(ParseSweepConfig(R"({"families": ["spheres"], "sizes": [5],
      "kappas": [1], "seeds": [0], "solvers": ["sg"]})"),
               ParseError);
}

}  // namespace
}  // namespace submodular
