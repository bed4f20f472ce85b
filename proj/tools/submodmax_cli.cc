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

// Command line front end: gen, solve, verify, bench and bound.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submodmax/errors.h"
#include "submodmax/generators.h"
#include "submodmax/harness.h"
#include "submodmax/instance_io.h"
#include "submodmax/property_suite.h"
#include "submodmax/verify.h"

namespace submodmax {
namespace {

constexpr int kExitHardFailure = 1;
constexpr int kExitUsage = 2;

// Writes to `path`, or stdout when it is empty or "-".
void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

std::string Fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

struct RunFlags {
  double alpha = kDefaultAlpha;
  double delta = kDefaultDelta;
  std::string theta_grid = kDefaultThetaGrid;
  std::string mode = "exact";
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  int threads = 1;

  void Register(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "Dampening cap in [0.5, 1]")
        ->capture_default_str();
    cmd->add_option("--delta", delta, "Step size; 1/delta must be an integer")
        ->capture_default_str();
    cmd->add_option("--theta-grid", theta_grid,
                    "Switch times, e.g. \"0:0.02:1,+0.18\"")
        ->capture_default_str();
    cmd->add_option("--mode", mode, "Gradient estimator: exact|closed|mc")
        ->capture_default_str();
    cmd->add_option("--samples", samples, "Monte-carlo sample count")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
    cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
  }

  HarnessOptions Options() const {
    HarnessOptions o;
    o.alpha = alpha;
    o.delta = delta;
    o.theta_grid = theta_grid;
    o.mode = ParseEstimatorMode(mode);
    o.samples = samples;
    o.seed = seed;
    return o;
  }
};

int RunGen(const std::string& kind, int n, const std::string& constraint,
           const ConstraintSpec& base, std::uint64_t seed,
           const std::string& out) {
  ConstraintSpec spec = base;
  spec.kind = ParsePolytopeKind(constraint);
  Emit(out, SerializeInstance(Generate(ParseFunctionKind(kind), n, spec, seed)));
  return 0;
}

int RunSolve(const std::string& path, const RunFlags& flags,
             const std::string& out) {
  const InstanceFile instance = ReadInstanceFile(path);
  HarnessOptions options = flags.Options();
  options.solve_threads = flags.threads;
  const ResultRecord record = RunInstance(instance, options);
  Emit(out, ResultRecordJson(record));
  return 0;
}

// Prints one line per check; returns the number of hard failures.
int VerifyInstance(const InstanceFile& instance, const RunFlags& flags,
                   const SuiteOptions& suite) {
  int failures = 0;
  std::cout << "== " << instance.name << " (n=" << instance.function.n()
            << ", " << DescribeConstraint(instance.constraint) << ")\n";
  for (const PropertyCheck& c :
       RunPropertySuite(instance.function, instance.constraint, suite)) {
    const bool bad = c.hard && !c.passed();
    failures += bad;
    std::cout << (c.passed() ? "  PASS " : (c.hard ? "  FAIL " : "  WARN "))
              << c.name << " trials=" << c.trials
              << " failures=" << c.failures
              << " worst_margin=" << c.worst_margin << "\n";
  }
  HarnessOptions options = flags.Options();
  options.solve_threads = flags.threads;
  const ResultRecord record = RunInstance(instance, options);
  for (const DiagnosticRecord& d : record.diagnostics) {
    const bool bad = d.hard && !d.passed;
    failures += bad;
    std::cout << (d.passed ? "  PASS " : (d.hard ? "  FAIL " : "  WARN "))
              << d.name << " worst_margin=" << d.worst_margin << "\n";
  }
  return failures;
}

int RunVerify(const std::string& path, const std::string& corpus,
              const RunFlags& flags, int trials) {
  SuiteOptions suite;
  suite.trials = trials;
  suite.seed = flags.seed;
  suite.include_monte_carlo = flags.mode == "mc";
  std::vector<InstanceFile> instances;
  if (!path.empty()) {
    instances.push_back(ReadInstanceFile(path));
  } else {
    instances = NamedCorpus(corpus, flags.seed);
  }
  int failures = 0;
  for (const InstanceFile& instance : instances) {
    failures += VerifyInstance(instance, flags, suite);
  }
  std::cout << "hard failures: " << failures << "\n";
  return failures == 0 ? 0 : kExitHardFailure;
}

int RunBenchCommand(const std::string& corpus, const RunFlags& flags,
                    const std::string& out) {
  const std::vector<InstanceFile> instances =
      NamedCorpus(corpus, flags.seed);
  const std::vector<ResultRecord> records =
      RunBench(instances, flags.Options(), flags.threads);
  Emit(out, CsvTable(records));
  // Keep stdout clean for the table when it goes there.
  std::ostream& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  log << FormatSummary(Summarize(records));
  return 0;
}

int RunBound(double alpha, double theta, const std::string& grid) {
  const std::vector<double> thetas = ParseThetaGrid(grid);
  const auto [best_theta, best_value] = BestBound(alpha, thetas);
  std::cout << Fmt(ComputeBound(alpha, theta), 4) << "\n";
  std::cout << "C(alpha=" << alpha << ", theta=" << theta
            << ") = " << Fmt(ComputeBound(alpha, theta), 10) << "\n";
  std::cout << "best theta on grid: " << Fmt(best_theta, 4)
            << " (C = " << Fmt(best_value, 10) << ")\n";
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Constrained non-monotone submodular maximization"};
  app.require_subcommand(1);

  std::string out;
  std::string instance_path;
  std::string corpus = "desk";
  RunFlags flags;

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string kind = "directed-cut";
  std::string constraint = "cardinality";
  int n = 8;
  ConstraintSpec spec;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", kind, "directed-cut|coverage|explicit-table")
      ->capture_default_str();
  gen->add_option("--n", n, "Ground set size")->capture_default_str();
  gen->add_option("--constraint", constraint,
                  "cardinality|partition-matroid|knapsack")
      ->capture_default_str();
  gen->add_option("--k", spec.k, "Cardinality or per-block budget")
      ->capture_default_str();
  gen->add_option("--blocks", spec.blocks, "Partition blocks")
      ->capture_default_str();
  gen->add_option("--budget-fraction", spec.budget_fraction,
                  "Knapsack budget / total cost")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen->add_option("--out", out, "Output file (default stdout)");

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("--instance", instance_path, "Instance JSON")->required();
  flags.Register(solve);
  solve->add_option("--out", out, "Result JSON (default stdout)");

  CLI::App* verify =
      app.add_subcommand("verify", "Property suite and solver diagnostics");
  auto* verify_instance =
      verify->add_option("--instance", instance_path, "Instance JSON");
  verify->add_option("--corpus", corpus, "Built-in corpus (desk)")
      ->excludes(verify_instance);
  int trials = 500;
  verify->add_option("--trials", trials, "Randomized trials per property")
      ->capture_default_str();
  flags.Register(verify);

  CLI::App* bench = app.add_subcommand("bench", "Run a seeded corpus");
  bench->add_option("--corpus", corpus, "Built-in corpus (desk)")
      ->capture_default_str();
  flags.Register(bench);
  bench->add_option("--out", out, "CSV table (default stdout)");

  CLI::App* bound = app.add_subcommand("bound", "Approximation constant");
  double alpha = kDefaultAlpha;
  double theta = 0.18;
  std::string grid = "0:0.001:1";
  bound->add_option("--alpha", alpha, "Cap in [0.5, 1]")->capture_default_str();
  bound->add_option("--theta", theta, "Switch time in [0, 1]")
      ->capture_default_str();
  bound->add_option("--grid", grid, "Theta grid searched for the maximum")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return RunGen(kind, n, constraint, spec, gen_seed, out);
    if (*solve) return RunSolve(instance_path, flags, out);
    if (*verify) return RunVerify(instance_path, corpus, flags, trials);
    if (*bench) return RunBenchCommand(corpus, flags, out);
    if (*bound) return RunBound(alpha, theta, grid);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace submodmax

int main(int argc, char** argv) { return submodmax::Main(argc, argv); }
