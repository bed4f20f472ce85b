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

#include "submodmax/continuous_greedy.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "submodmax/double_greedy.h"
#include "submodmax/errors.h"

namespace submodmax {
namespace {

constexpr double kGridTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-9;

// Seed labels for the oracle streams.
constexpr std::uint64_t kDampenedLabel = 1;
constexpr std::uint64_t kStandardLabel = 2;
constexpr std::uint64_t kBranchLabel = 3;

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

double ParseNumber(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value)) {
    throw ConfigError("bad number '" + text + "' in theta grid '" + spec + "'");
  }
  return value;
}

double SnapToGrid(double v) { return std::round(v * 1e12) / 1e12; }

std::int64_t StepCount(double time, double delta) {
  return std::llround(time / delta);
}

EstimatorConfig StepConfig(const EstimatorConfig& base, std::uint64_t label,
                           std::int64_t theta_steps, std::int64_t step) {
  EstimatorConfig cfg = base;
  if (cfg.mode == EstimatorMode::kMonteCarlo) {
    std::uint64_t s = DeriveSeed(base.rng_seed, label);
    s = DeriveSeed(s, static_cast<std::uint64_t>(theta_steps));
    cfg.rng_seed = DeriveSeed(s, static_cast<std::uint64_t>(step));
  }
  return cfg;
}

double MinResidualMargin(const Point& x, double envelope) {
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    margin = std::min(margin, (1.0 - x[i]) - envelope);
  }
  return margin;
}

struct StageSpec {
  double cap = 1.0;
  std::int64_t first_step = 0;
  std::int64_t steps = 0;
  std::uint64_t label = 0;
  std::int64_t theta_steps = 0;
  // Envelope of 1 - x_i after `k` steps of this stage.
  double envelope_base = 1.0;
  double envelope_ratio = 1.0;
};

struct StageOutput {
  Point end;
  double end_value = 0.0;
  Trajectory trajectory;
  StageSummary summary;
};

StageOutput RunStage(const SetFunction& f, const Polytope& c,
                     const RunConfig& run, const Point& start,
                     const StageSpec& spec) {
  const EstimatorConfig exact = ExactConfigFor(f);
  const double n = f.n();
  const double penalty = run.delta * run.delta * n * n * n * MaxSingleton(f);
  const CapParam cap(spec.cap);

  StageOutput out;
  out.summary.steps = static_cast<int>(spec.steps);
  out.summary.envelope_margin =
      MinResidualMargin(start, spec.envelope_base);
  out.summary.step_margin = std::numeric_limits<double>::infinity();
  out.summary.feasible = ContainsPoint(c, start);

  Point x = start;
  double value = Multilinear(f, x, exact);
  const double start_value = value;
  double change_sum = 0.0;
  for (std::int64_t k = 0; k < spec.steps; ++k) {
    const EstimatorConfig cfg =
        StepConfig(run.cfg, spec.label, spec.theta_steps, spec.first_step + k);
    const std::vector<double> residual = ResidualGradient(f, x, cfg);
    Point v = LinearMaximize(c, residual, cap);
    const double inner = Dot(residual, v.coords());

    std::vector<double> next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      next[i] = x[i] + run.delta * v[i] * (1.0 - x[i]);
    }
    Point x_next(std::move(next));
    const double next_value = Multilinear(f, x_next, exact);

    const double change = next_value - value;
    change_sum += change;
    out.summary.step_margin = std::min(
        out.summary.step_margin, change - (run.delta * inner - penalty));
    const double envelope =
        spec.envelope_base * std::pow(spec.envelope_ratio, k + 1);
    out.summary.envelope_margin =
        std::min(out.summary.envelope_margin, MinResidualMargin(x_next, envelope));
    out.summary.feasible = out.summary.feasible && ContainsPoint(c, x_next);

    out.trajectory.times.push_back(
        static_cast<double>(spec.first_step + k) * run.delta);
    out.trajectory.points.push_back(std::move(x));
    out.trajectory.directions.push_back(std::move(v));
    out.trajectory.inner_products.push_back(inner);
    out.trajectory.values.push_back(value);

    x = std::move(x_next);
    value = next_value;
  }
  if (spec.steps == 0) out.summary.step_margin = 0.0;
  out.summary.telescoping_residual =
      std::abs(value - start_value - change_sum);
  out.end = std::move(x);
  out.end_value = value;
  return out;
}

void CheckDimensions(const SetFunction& f, const Polytope& c) {
  if (f.n() != c.n()) {
    throw InvalidArgumentError("function and polytope ground sets differ");
  }
}

void CheckTheta(const RunConfig& run, double theta) {
  const bool listed =
      std::any_of(run.theta_grid.begin(), run.theta_grid.end(),
                  [&](double t) { return std::abs(t - theta) <= kGridTolerance; });
  if (!listed) {
    std::ostringstream msg;
    msg << "theta " << theta << " is not in the run's theta grid";
    throw ConfigError(msg.str());
  }
}

ThetaRecord RunTheta(const SetFunction& f, const Polytope& c,
                     const RunConfig& run, double theta) {
  const EstimatorConfig exact = ExactConfigFor(f);
  DampenedResult damp = DampenedStage(f, c, run, theta);
  StandardResult standard = StandardStage(f, c, run, damp.x_theta, theta);
  const std::int64_t theta_steps = StepCount(theta, run.delta);
  BranchResult branch =
      DoubleGreedyBranch(f, c, damp.x_theta,
                         StepConfig(run.cfg, kBranchLabel, theta_steps, 0));

  ThetaRecord rec;
  rec.theta = theta;
  rec.x_theta_value = Multilinear(f, damp.x_theta, exact);
  rec.x_theta = std::move(damp.x_theta);
  rec.v_theta = std::move(damp.v_theta);
  rec.inner_product = damp.inner_product;
  rec.y1_value = Multilinear(f, standard.y1, exact);
  rec.y1 = std::move(standard.y1);
  rec.z_value = Multilinear(f, branch.z, exact);
  rec.p = std::move(branch.p);
  rec.z = std::move(branch.z);
  rec.dampened = damp.summary;
  rec.standard = standard.summary;
  if (run.keep_trajectories) {
    rec.dampened_trajectory = std::move(damp.trajectory);
    rec.standard_trajectory = std::move(standard.trajectory);
  }
  return rec;
}

std::vector<ThetaRecord> SweepThetas(const SetFunction& f, const Polytope& c,
                                     const RunConfig& run) {
  const std::size_t count = run.theta_grid.size();
  std::vector<ThetaRecord> records(count);
  std::size_t workers = run.threads > 0
                            ? static_cast<std::size_t>(run.threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      records[i] = RunTheta(f, c, run, run.theta_grid[i]);
    }
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) {
          records[i] = RunTheta(f, c, run, run.theta_grid[i]);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

DiagnosticRecord MinRecord(std::string name, bool hard, double margin,
                           double tolerance) {
  return {std::move(name), hard, margin >= -tolerance, margin};
}

}  // namespace

std::vector<double> ParseThetaGrid(const std::string& spec) {
  std::vector<double> values;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = Trim(item);
    if (!item.empty() && item.front() == '+') item = Trim(item.substr(1));
    if (item.empty()) throw ConfigError("empty item in theta grid '" + spec + "'");
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      values.push_back(SnapToGrid(ParseNumber(item, spec)));
      continue;
    }
    const auto colon2 = item.find(':', colon + 1);
    if (colon2 == std::string::npos) {
      throw ConfigError("range '" + item + "' needs start:step:stop");
    }
    const double start = ParseNumber(Trim(item.substr(0, colon)), spec);
    const double step =
        ParseNumber(Trim(item.substr(colon + 1, colon2 - colon - 1)), spec);
    const double stop = ParseNumber(Trim(item.substr(colon2 + 1)), spec);
    if (!(step > 0.0) || stop < start) {
      throw ConfigError("range '" + item + "' needs step > 0 and stop >= start");
    }
    const std::int64_t count = std::llround(std::floor((stop - start) / step + 1e-9));
    for (std::int64_t i = 0; i <= count; ++i) {
      values.push_back(SnapToGrid(start + static_cast<double>(i) * step));
    }
  }
  if (values.empty()) throw ConfigError("theta grid is empty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end(),
                           [](double a, double b) {
                             return std::abs(a - b) <= kGridTolerance;
                           }),
               values.end());
  return values;
}

void ValidateRunConfig(const RunConfig& run) {
  if (!(run.alpha >= 0.5 && run.alpha <= 1.0)) {
    throw ConfigError("alpha must lie in [1/2, 1]");
  }
  if (!(run.delta > 0.0 && run.delta <= 1.0)) {
    throw ConfigError("delta must lie in (0, 1]");
  }
  const double total = 1.0 / run.delta;
  if (std::abs(total - std::round(total)) > 1e-9 * total) {
    throw ConfigError("1/delta must be an integer");
  }
  if (run.theta_grid.empty()) throw ConfigError("theta grid is empty");
  for (double theta : run.theta_grid) {
    const double aligned = static_cast<double>(StepCount(theta, run.delta)) *
                           run.delta;
    if (theta < -kGridTolerance || theta > 1.0 + kGridTolerance ||
        std::abs(theta - aligned) > kGridTolerance) {
      std::ostringstream msg;
      msg << "theta " << theta << " is not a multiple of delta " << run.delta
          << " inside [0, 1]";
      throw ConfigError(msg.str());
    }
  }
  if (!std::is_sorted(run.theta_grid.begin(), run.theta_grid.end())) {
    throw ConfigError("theta grid must be ascending");
  }
}

DampenedResult DampenedStage(const SetFunction& f, const Polytope& c,
                             const RunConfig& run, double theta) {
  ValidateRunConfig(run);
  ValidateConfig(f, run.cfg);
  CheckDimensions(f, c);
  CheckTheta(run, theta);
  const std::int64_t theta_steps = StepCount(theta, run.delta);
  StageSpec spec;
  spec.cap = run.alpha;
  spec.steps = theta_steps;
  spec.label = kDampenedLabel;
  spec.theta_steps = theta_steps;
  spec.envelope_ratio = 1.0 - run.delta * run.alpha;
  StageOutput stage = RunStage(f, c, run, Point::Zeros(f.n()), spec);

  DampenedResult result;
  const EstimatorConfig cfg =
      StepConfig(run.cfg, kDampenedLabel, theta_steps, theta_steps);
  const std::vector<double> residual = ResidualGradient(f, stage.end, cfg);
  result.v_theta = LinearMaximize(c, residual, CapParam(run.alpha));
  result.inner_product = Dot(residual, result.v_theta.coords());
  result.x_theta = std::move(stage.end);
  result.trajectory = std::move(stage.trajectory);
  result.summary = stage.summary;
  return result;
}

StandardResult StandardStage(const SetFunction& f, const Polytope& c,
                             const RunConfig& run, const Point& start,
                             double theta) {
  ValidateRunConfig(run);
  ValidateConfig(f, run.cfg);
  CheckDimensions(f, c);
  CheckTheta(run, theta);
  if (start.size() != static_cast<std::size_t>(f.n())) {
    throw InvalidArgumentError("start point dimension mismatch");
  }
  const std::int64_t theta_steps = StepCount(theta, run.delta);
  StageSpec spec;
  spec.cap = 1.0;
  spec.first_step = theta_steps;
  spec.steps = StepCount(1.0, run.delta) - theta_steps;
  spec.label = kStandardLabel;
  spec.theta_steps = theta_steps;
  spec.envelope_base = std::pow(1.0 - run.delta * run.alpha,
                                static_cast<double>(theta_steps));
  spec.envelope_ratio = 1.0 - run.delta;
  StageOutput stage = RunStage(f, c, run, start, spec);
  return {std::move(stage.end), std::move(stage.trajectory), stage.summary};
}

BranchResult DoubleGreedyBranch(const SetFunction& f, const Polytope& c,
                                const Point& x_theta,
                                const EstimatorConfig& cfg) {
  CheckDimensions(f, c);
  const std::vector<double> residual = ResidualGradient(f, x_theta, cfg);
  Point p = LinearMaximize(c, residual, CapParam(1.0));
  Point z = DoubleGreedyBox(f, Point::Zeros(f.n()), p, ExactConfigFor(f));
  return {std::move(p), std::move(z)};
}

bool SolveReport::HardDiagnosticsPass() const {
  return std::all_of(diagnostics.begin(), diagnostics.end(),
                     [](const DiagnosticRecord& d) { return !d.hard || d.passed; });
}

const DiagnosticRecord* SolveReport::Find(const std::string& name) const {
  for (const auto& d : diagnostics) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

SolveReport Solve(const SetFunction& f, const Polytope& c,
                  const RunConfig& run) {
  ValidateRunConfig(run);
  ValidateConfig(f, run.cfg);
  CheckDimensions(f, c);
  const EstimatorConfig exact = ExactConfigFor(f);

  SolveReport report;
  report.per_theta = SweepThetas(f, c, run);
  report.best = Point::Zeros(f.n());
  report.best_value = Multilinear(f, report.best, exact);
  for (const ThetaRecord& rec : report.per_theta) {
    if (rec.y1_value > report.best_value) {
      report.best = rec.y1;
      report.best_value = rec.y1_value;
      report.best_source = BestSource::kContinuousGreedy;
      report.best_theta = rec.theta;
    }
    if (rec.z_value > report.best_value) {
      report.best = rec.z;
      report.best_value = rec.z_value;
      report.best_source = BestSource::kDoubleGreedy;
      report.best_theta = rec.theta;
    }
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  bool feasible = true;
  double damp_env = kInf;
  double std_env = kInf;
  double step = kInf;
  double telescoping = 0.0;
  for (const ThetaRecord& rec : report.per_theta) {
    feasible = feasible && rec.dampened.feasible && rec.standard.feasible &&
               ContainsPoint(c, rec.p) && ContainsPoint(c, rec.z) &&
               LessEq(rec.z, rec.p);
    damp_env = std::min(damp_env, rec.dampened.envelope_margin);
    std_env = std::min(std_env, rec.standard.envelope_margin);
    step = std::min({step, rec.dampened.step_margin, rec.standard.step_margin});
    telescoping = std::max({telescoping, rec.dampened.telescoping_residual,
                            rec.standard.telescoping_residual});
  }
  const bool exact_oracle = run.cfg.mode != EstimatorMode::kMonteCarlo;
  report.diagnostics.push_back({"feasibility", true, feasible, feasible ? 0.0 : -1.0});
  report.diagnostics.push_back(
      MinRecord("envelope_dampened", true, damp_env, kEnvelopeSlack));
  report.diagnostics.push_back(
      MinRecord("envelope_standard", true, std_env, kEnvelopeSlack));
  report.diagnostics.push_back(
      MinRecord("step_gain", exact_oracle, step, kIdentityTolerance));
  report.diagnostics.push_back(
      MinRecord("telescoping", true, -telescoping, kIdentityTolerance));
  const double replay = Multilinear(f, report.best, exact);
  report.diagnostics.push_back(
      MinRecord("best_reproduces", true,
                -std::abs(replay - report.best_value), kIdentityTolerance));
  return report;
}

const char* BestSourceName(BestSource source) {
  switch (source) {
    case BestSource::kOrigin:
      return "origin";
    case BestSource::kContinuousGreedy:
      return "continuous-greedy";
    case BestSource::kDoubleGreedy:
      return "double-greedy";
  }
  return "unknown";
}

}  // namespace submodmax
