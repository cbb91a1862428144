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

#include "submodular/cli.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "submodular/bruteforce.h"
#include "submodular/continuous_greedy.h"
#include "submodular/distributed.h"
#include "submodular/generators.h"
#include "submodular/greedy.h"
#include "submodular/parallel.h"
#include "submodular/properties.h"

namespace submodular {
namespace {

constexpr double kBoundSlack = 1e-9;
constexpr std::size_t kMaxOptSize = 20;

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::size_t workers = 1;
  std::string out_path;
  bool no_timestamp = false;
};

void AddCommonFlags(CLI::App* app, CommonFlags& flags) {
  app->add_option("--seed", flags.seed, "Master seed");
  app->add_option("--workers", flags.workers, "Worker threads for batches")
      ->check(CLI::PositiveNumber);
  app->add_option("--out", flags.out_path, "Write CSV here instead of stdout");
  app->add_flag("--no-timestamp", flags.no_timestamp,
                "Omit the timestamp line and wall-clock times");
}

std::string Num(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

std::string Opt(const std::optional<double>& v) { return v ? Num(*v) : ""; }

std::string TimestampLine() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream out;
  out << "# " << kVersionTag << " " << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ")
      << "\n";
  return out.str();
}

// Writes to --out when given, else to `out`.
class Sink {
 public:
  Sink(const CommonFlags& flags, std::ostream& out) : out_(&out) {
    if (!flags.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(flags.out_path);
      if (!*file_) {
        throw std::runtime_error("cannot write " + flags.out_path);
      }
      out_ = file_.get();
    }
    if (!flags.no_timestamp) *out_ << TimestampLine();
  }
  std::ostream& stream() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

// Largest ratio guaranteed for greedy-type solvers on this problem, if any.
std::optional<double> GreedyBound(const Problem& problem) {
  const ValueOracle& f = *problem.oracle;
  std::optional<double> c;
  if (f.ground_size() <= kMaxExhaustive) {
    if (!CheckSubmodular(f).holds || !CheckMonotone(f).holds ||
        !CheckNormal(f).holds) {
      return std::nullopt;
    }
    c = TotalCurvature(f).curvature;
  }
  // A single-block partition greedy is the uniform greedy.
  if (problem.uniform) return BoundUniformCurvature(c.value_or(1.0));
  if (!problem.partition) {
    if (problem.ground_size() > kMaxExhaustive ||
        !VerifyMatroidAxioms(*problem.constraint).holds) {
      return std::nullopt;
    }
  }
  return BoundPartitionCurvature(c.value_or(1.0));
}

std::string CsvHeader(bool sweep) {
  return sweep ? "family,solver,instance,n,kappa,value,opt,ratio,bound,"
                 "oracle_calls,wall_time,seed,master_seed,version\n"
               : "solver,instance,n,kappa,value,opt,ratio,bound,oracle_calls,"
                 "wall_time,seed,version\n";
}

std::string RowCsv(const SolveRow& row, bool timestamps) {
  std::ostringstream out;
  out << row.solver << "," << row.instance << "," << row.n << "," << row.kappa
      << "," << Num(row.value) << "," << Opt(row.opt) << "," << Opt(row.ratio)
      << "," << Opt(row.bound) << "," << row.oracle_calls << ","
      << (timestamps ? Num(row.wall_time) : "") << "," << row.seed;
  return out.str();
}

std::vector<std::size_t> ParseOrder(const std::string& text) {
  std::vector<std::size_t> order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      order.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --block-order entry \"" + item + "\"");
    }
  }
  return order;
}

// ---------------------------------------------------------------------------

int Verify(const std::string& path, std::size_t samples,
           const CommonFlags& flags, std::ostream& out) {
  const Problem problem = BuildProblem(ParseInstanceFile(path));
  const ValueOracle& f = *problem.oracle;
  const std::size_t n = f.ground_size();
  CheckOptions opts;
  opts.samples = samples;
  opts.seed = flags.seed.value_or(0);
  if (n > kMaxExhaustive && samples == 0) {
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " exceeds the exhaustive limit " +
                                std::to_string(kMaxExhaustive) +
                                "; pass --samples for a sampled check");
  }
  bool all = true;
  for (const PropertyReport& report :
       {CheckNormal(f, opts), CheckMonotone(f, opts),
        CheckSubmodular(f, opts)}) {
    out << report.ToString() << "\n";
    all = all && report.holds;
  }
  if (all) {
    const CurvatureReport c = TotalCurvature(f, opts);
    out << "curvature: c = " << Num(c.curvature)
        << (c.exhaustive ? " (exhaustive)" : " (from R = P \\ {p})");
    if (c.zero_singleton_flag()) {
      out << "; zero singleton gains force c = 1 at elements";
      for (ElementId p : c.zero_singletons) out << " " << p;
    }
    out << "\n";
  } else {
    out << "curvature: skipped, f is not normal, monotone and submodular\n";
  }
  if (n <= kMaxExhaustive) {
    const PropertyReport m = VerifyMatroidAxioms(*problem.constraint, opts);
    out << m.ToString() << "\n";
    all = all && m.holds;
  } else if (problem.partition) {
    out << "matroid: holds (" << problem.constraint->name()
        << " matroid by construction)\n";
  } else {
    out << "matroid: unchecked, n exceeds the exhaustive limit\n";
    all = false;
  }
  return all ? kExitOk : kExitViolation;
}

int Solve(const std::string& path, const SolveOptions& options,
          const CommonFlags& flags, std::ostream& out) {
  const Problem problem = BuildProblem(ParseInstanceFile(path));
  const SolveRow row = SolveProblem(problem, options);
  Sink sink(flags, out);
  sink.stream() << CsvHeader(false) << RowCsv(row, options.timestamps) << ","
                << kVersionTag << "\n";
  return row.violation ? kExitViolation : kExitOk;
}

std::string WalkLabel(const std::vector<AgentId>& walk) {
  std::string label;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i > 0) label += "-";
    label += std::to_string(walk[i]);
  }
  return label;
}

int Simulate(const std::string& path, const CommonFlags& flags,
             std::ostream& out) {
  const ScenarioSpec scenario = ParseScenarioFile(path);
  const Problem problem = BuildProblem(scenario.instance);
  if (!problem.partition) {
    throw std::invalid_argument(
        "distributed runs need a uniform or partition constraint");
  }
  const PartitionMatroid& m = *problem.partition;
  if (m.num_blocks() != scenario.num_agents) {
    throw std::invalid_argument(
        "instance has " + std::to_string(m.num_blocks()) +
        " blocks but the topology has " + std::to_string(scenario.num_agents) +
        " agents");
  }
  if (problem.ground_size() > kMaxOptSize) {
    throw std::invalid_argument("simulation scores against brute force; n <= " +
                                std::to_string(kMaxOptSize));
  }
  const CommGraph graph(scenario.num_agents, scenario.edges);
  MessageSchedule schedule;
  std::set<std::size_t> forced(scenario.failed_hops.begin(),
                               scenario.failed_hops.end());
  if (scenario.schedule) {
    schedule.walk = *scenario.schedule;
    if (graph.IsConnected()) {
      ValidateSchedule(graph, schedule.walk);
    } else {
      // Coverage is still required; hops across non-edges never deliver.
      for (std::size_t h : NonEdgeHops(graph, schedule.walk)) forced.insert(h);
      CommGraph complete = CommGraph::Complete(scenario.num_agents);
      ValidateSchedule(complete, schedule.walk);
    }
    schedule.hamiltonian = schedule.walk.size() == scenario.num_agents &&
                           NonEdgeHops(graph, schedule.walk).empty();
    schedule.optimal = false;
  } else {
    if (!graph.IsConnected()) {
      throw std::invalid_argument(
          "topology is disconnected; give an explicit schedule");
    }
    schedule = FindMessageSequence(graph);
  }
  const std::uint64_t seed = flags.seed.value_or(scenario.seed.value_or(0));
  const std::size_t agents = scenario.num_agents;

  Sink sink(flags, out);
  std::ostream& csv = sink.stream();
  csv << "trial,p,ratio,omega,hamiltonian_flag,revisits,dropped_hops,value,"
         "opt,bound,schedule,seed,version\n";
  bool violation = false;
  auto emit = [&](std::size_t trial, double p, double ratio, std::size_t omega,
                  std::size_t dropped, double value, double opt) {
    const double bound = GapBoundIncomplete(agents, omega);
    if (ratio < bound - kBoundSlack) violation = true;
    csv << trial << "," << Num(p) << "," << Num(ratio) << "," << omega << ","
        << (schedule.hamiltonian ? "true" : "false") << ","
        << schedule.revisits() << "," << dropped << "," << Num(value) << ","
        << Num(opt) << "," << Num(bound) << "," << WalkLabel(schedule.walk)
        << "," << seed << "," << kVersionTag << "\n";
  };

  const ValueOracle& f = *problem.oracle;
  if (scenario.p_grid) {
    const SweepResult sweep =
        BernoulliSweep(f, m, schedule, *scenario.p_grid, scenario.trials, seed,
                       flags.workers, forced);
    for (const SweepRow& row : sweep.rows) {
      emit(row.trial, row.p, row.ratio, row.omega, row.dropped_hops, row.value,
           sweep.opt);
    }
  } else {
    DropModel drops;
    if (scenario.drop_mode == ScenarioDropMode::kBernoulli) {
      drops = DropModel::Bernoulli(scenario.p_success, seed);
    } else if (!forced.empty()) {
      drops = DropModel::FailedHops(forced);
    }
    const DistributedResult run = RunDistributedSG(f, m, schedule.walk, drops);
    const double opt = BruteForceOpt(f, m).value;
    const double p = scenario.drop_mode == ScenarioDropMode::kBernoulli
                         ? scenario.p_success
                         : 1.0;
    emit(0, p, EmpiricalGap(f, run.set, opt).ratio,
         CliqueNumber(run.info_graph), run.dropped_hops, run.trace.final_value,
         opt);
  }
  return violation ? kExitViolation : kExitOk;
}

int Sweep(const std::string& path, const CommonFlags& flags,
          std::ostream& out) {
  const SweepConfig config = ParseSweepConfigFile(path);
  const std::uint64_t master = flags.seed.value_or(0);
  struct Item {
    Family family;
    std::size_t n;
    std::size_t kappa;
    std::uint64_t seed;
    std::string solver;
  };
  std::vector<Item> items;
  for (Family family : config.families) {
    for (std::size_t n : config.sizes) {
      for (std::size_t kappa : config.kappas) {
        for (std::uint64_t seed : config.seeds) {
          for (const std::string& solver : config.solvers) {
            items.push_back({family, n, kappa, seed, solver});
          }
        }
      }
    }
  }
  const bool timestamps = !flags.no_timestamp;
  std::vector<std::string> lines(items.size());
  std::vector<char> violations(items.size(), 0);
  ParallelFor(items.size(), flags.workers, [&](std::size_t i) {
    const Item& item = items[i];
    const auto family_key = static_cast<std::uint64_t>(item.family);
    // Independent of kappa, so a kappa sweep reuses the same function.
    const std::uint64_t instance_seed =
        DeriveSeed(master, {family_key, item.n, item.seed});
    InstanceSpec spec;
    spec.name = FamilyName(item.family) + "-n" + std::to_string(item.n) + "-s" +
                std::to_string(item.seed);
    spec.function = RandomFunctionSpec(item.family, item.n, instance_seed);
    if (config.constraint == "uniform") {
      spec.constraint = UniformSpec{std::min(item.kappa, item.n)};
    } else {
      const PartitionMatroid m = RandomPartition(
          item.n, config.max_blocks, item.kappa,
          DeriveSeed(master, {family_key, item.n, item.seed, 1}));
      PartitionSpec partition;
      for (std::size_t b = 0; b < m.num_blocks(); ++b) {
        partition.blocks.push_back(m.block(b));
      }
      partition.kappas = m.kappas();
      spec.constraint = partition;
    }
    SolveOptions options;
    options.solver = item.solver;
    options.cg_steps = config.cg_steps;
    options.cg_samples = config.cg_samples;
    options.seed = item.seed;
    options.timestamps = timestamps;
    const SolveRow row = SolveProblem(BuildProblem(spec), options);
    violations[i] = row.violation ? 1 : 0;
    lines[i] = FamilyName(item.family) + "," + RowCsv(row, timestamps) + "," +
               std::to_string(master) + "," + kVersionTag + "\n";
  });
  Sink sink(flags, out);
  sink.stream() << CsvHeader(true);
  bool violation = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    sink.stream() << lines[i];
    violation = violation || violations[i];
  }
  return violation ? kExitViolation : kExitOk;
}

}  // namespace

SolveRow SolveProblem(const Problem& problem, const SolveOptions& options) {
  const ValueOracle& f = *problem.oracle;
  const std::size_t n = f.ground_size();
  SolveRow row{.solver = options.solver,
               .instance = problem.name,
               .n = n,
               .kappa = problem.KappaLabel(),
               .seed = options.seed};
  CountingOracle counted(f);
  const auto start = std::chrono::steady_clock::now();
  Subset chosen(n);
  bool guaranteed = true;
  if (options.solver == "sg" || options.solver == "lazy") {
    const GreedyTrace trace =
        options.solver == "sg" ? SequentialGreedy(counted, *problem.constraint)
                               : LazyGreedy(counted, *problem.constraint);
    chosen = trace.final_set;
    row.bound = GreedyBound(problem);
  } else if (options.solver == "sg-partition") {
    if (!problem.partition) {
      throw std::invalid_argument(
          "sg-partition needs a uniform or partition constraint");
    }
    chosen = SequentialGreedyPartition(counted, *problem.partition,
                                       options.block_order)
                 .final_set;
    row.bound = GreedyBound(problem);
  } else if (options.solver == "cg") {
    if (!problem.partition) {
      throw std::invalid_argument(
          "cg needs a uniform or partition matroid constraint");
    }
    CGParams params;
    params.steps = options.cg_steps;
    params.samples = options.cg_samples;
    params.seed = options.seed;
    params.mode =
        options.cg_samples > 0 ? GradientMode::kSampled : GradientMode::kExact;
    const ContinuousGreedyResult result =
        ContinuousGreedy(counted, *problem.partition, params);
    const PipageResult rounded =
        options.cg_samples > 0
            ? PipageRoundSampled(result.x_final, *problem.partition, counted,
                                 options.cg_samples,
                                 DeriveSeed(options.seed, {2}))
            : PipageRound(result.x_final, *problem.partition, counted);
    chosen = rounded.set;
    row.bound = 1.0 - std::exp(-1.0) - 2.0 / static_cast<double>(params.steps);
    // Sampled gradients only give the bound with high probability.
    guaranteed = options.cg_samples == 0;
  } else {
    throw std::invalid_argument("unknown solver \"" + options.solver +
                                "\"; expected sg, sg-partition, lazy or cg");
  }
  row.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  row.oracle_calls = counted.calls();
  row.value = f.Evaluate(chosen);
  if (n <= kMaxOptSize) {
    const OptimumResult opt = BruteForceOpt(f, *problem.constraint);
    row.opt = opt.value;
    row.ratio = EmpiricalGap(f, chosen, opt.value).ratio;
    if (row.bound && guaranteed && *row.ratio < *row.bound - kBoundSlack) {
      row.violation = true;
    }
  }
  return row;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Submodular maximization under matroid constraints", "submax"};
  app.set_version_flag("--version", kVersionTag);
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path;

  CLI::App* verify = app.add_subcommand("verify", "Check instance properties");
  verify->add_option("instance", path, "Instance file")->required();
  std::size_t samples = 0;
  verify->add_option("--samples", samples,
                     "Random checks when n is too large to enumerate");
  AddCommonFlags(verify, flags);

  CLI::App* solve = app.add_subcommand("solve", "Run one solver");
  solve->add_option("instance", path, "Instance file")->required();
  SolveOptions solve_options;
  std::string block_order;
  solve->add_option("--solver", solve_options.solver,
                    "sg|sg-partition|lazy|cg");
  solve->add_option("--block-order", block_order,
                    "Comma-separated block order for sg-partition");
  solve->add_option("--steps", solve_options.cg_steps, "Continuous greedy T")
      ->check(CLI::PositiveNumber);
  solve->add_option("--samples", solve_options.cg_samples,
                    "Samples per estimate for cg; 0 means exact");
  AddCommonFlags(solve, flags);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a distributed scenario");
  simulate->add_option("scenario", path, "Scenario file")->required();
  AddCommonFlags(simulate, flags);

  CLI::App* sweep = app.add_subcommand("sweep", "Run a solver grid");
  sweep->add_option("config", path, "Sweep config file")->required();
  AddCommonFlags(sweep, flags);

  std::vector<std::string> argv_storage = {"submax"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return Verify(path, samples, flags, out);
    if (solve->parsed()) {
      if (!block_order.empty()) {
        solve_options.block_order = ParseOrder(block_order);
      }
      solve_options.seed = flags.seed.value_or(0);
      solve_options.timestamps = !flags.no_timestamp;
      return Solve(path, solve_options, flags, out);
    }
    if (simulate->parsed()) return Simulate(path, flags, out);
    if (sweep->parsed()) return Sweep(path, flags, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace submodular
