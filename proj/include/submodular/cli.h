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

#ifndef SUBMODULAR_CLI_H_
#define SUBMODULAR_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "submodular/instance_io.h"

namespace submodular {

inline constexpr char kVersionTag[] = "submax-0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs the submax command line. `args` excludes the program name. CSV goes to
// `out` unless --out names a file; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

struct SolveOptions {
  std::string solver = "sg";
  std::vector<std::size_t> block_order;
  std::size_t cg_steps = 50;
  // 0 selects exact gradients and exact pipage rounding.
  std::size_t cg_samples = 0;
  std::uint64_t seed = 0;
  bool timestamps = true;
};

struct SolveRow {
  std::string solver;
  std::string instance;
  std::size_t n = 0;
  std::string kappa;
  double value = 0.0;
  std::optional<double> opt;
  std::optional<double> ratio;
  std::optional<double> bound;
  std::size_t oracle_calls = 0;
  double wall_time = 0.0;
  std::uint64_t seed = 0;
  // ratio < bound - 1e-9 with a bound that is a guarantee for this run.
  bool violation = false;
};

// Runs one solver on a problem and scores it against brute force when
// n <= 20. Throws std::invalid_argument for unusable solver/constraint pairs.
SolveRow SolveProblem(const Problem& problem, const SolveOptions& options);

}  // namespace submodular

#endif  // SUBMODULAR_CLI_H_
