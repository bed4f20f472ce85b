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

#include "submodmax/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace submodmax {
namespace {

using Json = nlohmann::ordered_json;

// Seed label of the gradient estimator.
constexpr std::uint64_t kEstimatorStream = 201;

std::string Fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void Accumulate(RatioStats& stats, const ResultRecord& r) {
  ++stats.instances;
  if (!r.ratio) return;
  const double ratio = *r.ratio;
  if (stats.rated == 0 || ratio < stats.min_ratio) stats.min_ratio = ratio;
  // Running mean keeps the summary exact for a single row.
  ++stats.rated;
  stats.mean_ratio += (ratio - stats.mean_ratio) / stats.rated;
}

void PrintStats(std::ostringstream& out, const std::string& label,
                const RatioStats& s) {
  out << label << ": instances=" << s.instances;
  if (s.rated > 0) {
    out << " min_ratio=" << Fixed(s.min_ratio, 4)
        << " mean_ratio=" << Fixed(s.mean_ratio, 4);
  } else {
    out << " min_ratio=n/a mean_ratio=n/a";
  }
  if (s.rated != s.instances) out << " unrated=" << s.instances - s.rated;
  out << "\n";
}

}  // namespace

RunConfig MakeRunConfig(const HarnessOptions& options, const SetFunction& f) {
  RunConfig run;
  run.alpha = options.alpha;
  run.delta = options.delta;
  run.theta_grid = ParseThetaGrid(options.theta_grid);
  run.threads = options.solve_threads;
  // "exact" means any exact estimator; the closed form is much cheaper
  // than enumeration for the structural families.
  if (options.mode == EstimatorMode::kExact) {
    run.cfg = ExactConfigFor(f);
  } else {
    run.cfg.mode = options.mode;
  }
  run.cfg.sample_count = options.samples;
  run.cfg.rng_seed = DeriveSeed(options.seed, kEstimatorStream);
  ValidateConfig(f, run.cfg);
  ValidateRunConfig(run);
  return run;
}

bool ResultRecord::HardDiagnosticsPass() const {
  return std::all_of(diagnostics.begin(), diagnostics.end(),
                     [](const DiagnosticRecord& d) {
                       return !d.hard || d.passed;
                     });
}

ResultRecord RunInstance(const InstanceFile& instance,
                         const HarnessOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const SetFunction& f = instance.function;
  const RunConfig run = MakeRunConfig(options, f);

  SolveReport report = Solve(f, instance.constraint, run);

  ResultRecord r;
  r.instance = instance.name;
  r.n = f.n();
  r.constraint = PolytopeKindName(instance.constraint.kind());
  r.alpha = run.alpha;
  r.delta = run.delta;
  r.theta_grid = options.theta_grid;
  r.seed = options.seed;
  r.mode = EstimatorModeName(options.mode);
  r.samples = options.mode == EstimatorMode::kMonteCarlo ? options.samples : 0;
  r.best_value = report.best_value;
  r.theta_best = report.best_theta;
  r.best_branch = BestSourceName(report.best_source);
  r.best_point = report.best.coords();

  if (f.n() <= std::min(options.opt_limit, kMaxBruteForceElements)) {
    const IntegralOptimum opt = BruteForceOpt(f, instance.constraint);
    r.opt_value = opt.value;
    if (opt.value > 0.0) r.ratio = report.best_value / opt.value;
    AddOptDiagnostics(report, f, run, opt.value);
  }
  for (const ThetaRecord& t : report.per_theta) {
    r.per_theta.push_back({t.theta, t.y1_value, t.z_value});
  }
  r.diagnostics = report.diagnostics;
  r.wall_clock_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return r;
}

std::vector<ResultRecord> RunBench(const std::vector<InstanceFile>& corpus,
                                   const HarnessOptions& options,
                                   int threads) {
  std::vector<ResultRecord> records(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        records[i] = RunInstance(corpus[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t count =
      threads > 0 ? static_cast<std::size_t>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  count = std::min(count, std::max<std::size_t>(corpus.size(), 1));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  // First failure in corpus order, so errors are deterministic too.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

std::string ResultRecordJson(const ResultRecord& r, bool include_timing) {
  Json doc;
  doc["instance"] = r.instance;
  doc["n"] = r.n;
  doc["constraint"] = r.constraint;
  Json params;
  params["alpha"] = r.alpha;
  params["delta"] = r.delta;
  params["theta_grid"] = r.theta_grid;
  params["seed"] = r.seed;
  params["mode"] = r.mode;
  params["samples"] = r.samples;
  doc["params"] = std::move(params);
  doc["best_value"] = r.best_value;
  doc["opt_value"] = r.opt_value ? Json(*r.opt_value) : Json(nullptr);
  doc["ratio"] = r.ratio ? Json(*r.ratio) : Json(nullptr);
  doc["theta_best"] = r.theta_best ? Json(*r.theta_best) : Json(nullptr);
  doc["best_branch"] = r.best_branch;
  doc["best_point"] = r.best_point;
  Json rows = Json::array();
  for (const ThetaRow& row : r.per_theta) {
    Json j;
    j["theta"] = row.theta;
    j["y1_value"] = row.y1_value;
    j["z_value"] = row.z_value;
    rows.push_back(std::move(j));
  }
  doc["per_theta"] = std::move(rows);
  Json diags = Json::array();
  for (const DiagnosticRecord& d : r.diagnostics) {
    Json j;
    j["name"] = d.name;
    j["hard"] = d.hard;
    j["passed"] = d.passed;
    j["worst_margin"] = d.worst_margin;
    diags.push_back(std::move(j));
  }
  doc["diagnostics"] = std::move(diags);
  doc["hard_diagnostics_pass"] = r.HardDiagnosticsPass();
  if (include_timing) doc["wall_clock_seconds"] = r.wall_clock_seconds;
  return doc.dump(2) + "\n";
}

std::string CsvRow(const ResultRecord& r) {
  std::ostringstream out;
  out << r.instance << "," << r.n << "," << r.constraint << ","
      << Fixed(r.alpha, 4) << "," << Fixed(r.delta, 6) << ","
      << (r.theta_best ? Fixed(*r.theta_best, 4) : "") << ","
      << Fixed(r.best_value) << ","
      << (r.opt_value ? Fixed(*r.opt_value) : "") << ","
      << (r.ratio ? Fixed(*r.ratio) : "");
  return out.str();
}

std::string CsvTable(std::span<const ResultRecord> records) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const ResultRecord& r : records) out += CsvRow(r) + "\n";
  return out;
}

BenchSummary Summarize(std::span<const ResultRecord> records) {
  BenchSummary s;
  for (const ResultRecord& r : records) {
    Accumulate(s.overall, r);
    Accumulate(s.by_constraint[r.constraint], r);
    if (!r.HardDiagnosticsPass()) ++s.hard_failures;
  }
  return s;
}

std::string FormatSummary(const BenchSummary& summary) {
  std::ostringstream out;
  PrintStats(out, "all", summary.overall);
  for (const auto& [name, stats] : summary.by_constraint) {
    PrintStats(out, name, stats);
  }
  out << "hard_diagnostic_failures: " << summary.hard_failures << "\n";
  return out.str();
}

}  // namespace submodmax
