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

// Solve/bench pipeline behind the command line tool: one ResultRecord per
// instance, serialized as JSON or as a CSV row.

#ifndef SUBMODMAX_HARNESS_H_
#define SUBMODMAX_HARNESS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "submodmax/continuous_greedy.h"
#include "submodmax/instance_io.h"
#include "submodmax/verify.h"

namespace submodmax {

inline constexpr char kCsvHeader[] =
    "instance,n,constraint,alpha,delta,theta_best,best_value,opt_value,ratio";

struct HarnessOptions {
  double alpha = kDefaultAlpha;
  double delta = kDefaultDelta;
  std::string theta_grid = kDefaultThetaGrid;
  EstimatorMode mode = EstimatorMode::kExact;
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  // Brute-force OPT runs when n is at most this.
  int opt_limit = kMaxBruteForceElements;
  // Threads of the theta sweep inside one solve.
  int solve_threads = 1;
};

// Builds and validates the solver configuration. The estimator seed is
// derived from options.seed. Throws ConfigError.
RunConfig MakeRunConfig(const HarnessOptions& options,
                        const SetFunction& f);

struct ThetaRow {
  double theta = 0.0;
  double y1_value = 0.0;
  double z_value = 0.0;
};

struct ResultRecord {
  std::string instance;
  int n = 0;
  std::string constraint;
  double alpha = 0.0;
  double delta = 0.0;
  std::string theta_grid;
  std::uint64_t seed = 0;
  std::string mode;
  std::int64_t samples = 0;
  double best_value = 0.0;
  std::optional<double> opt_value;
  // best_value / opt_value, present when opt_value > 0.
  std::optional<double> ratio;
  std::optional<double> theta_best;
  std::string best_branch;
  std::vector<double> best_point;
  std::vector<ThetaRow> per_theta;
  std::vector<DiagnosticRecord> diagnostics;
  double wall_clock_seconds = 0.0;

  bool HardDiagnosticsPass() const;
};

ResultRecord RunInstance(const InstanceFile& instance,
                         const HarnessOptions& options);

// Runs every instance (in parallel when threads > 1) and returns records in
// input order.
std::vector<ResultRecord> RunBench(const std::vector<InstanceFile>& corpus,
                                  const HarnessOptions& options, int threads);

// Two-space indented JSON with a fixed key order and a trailing newline.
// With include_timing = false the wall clock is omitted, so equal inputs
// give byte-identical output.
std::string ResultRecordJson(const ResultRecord& record,
                             bool include_timing = true);
std::string CsvRow(const ResultRecord& record);
std::string CsvTable(std::span<const ResultRecord> records);

struct RatioStats {
  int instances = 0;
  // Over instances with a ratio only.
  int rated = 0;
  double min_ratio = 0.0;
  double mean_ratio = 0.0;
};

struct BenchSummary {
  RatioStats overall;
  std::map<std::string, RatioStats> by_constraint;
  int hard_failures = 0;
};

BenchSummary Summarize(std::span<const ResultRecord> records);
std::string FormatSummary(const BenchSummary& summary);

}  // namespace submodmax

#endif  // SUBMODMAX_HARNESS_H_
