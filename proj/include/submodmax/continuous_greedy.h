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

// Dampened continuous greedy combined with double greedy, for maximizing
// the multilinear extension of a nonnegative (possibly non-monotone)
// submodular function over a down-closed polytope C.
//
// For every switch time theta of a grid, one run does:
//
//   1. Dampened stage, t = 0 .. theta in steps of delta, from x = 0:
//        v = LinearMaximize(C, grad F(x) o (1 - x), alpha)
//        x <- x + delta * v o (1 - x)
//   2. Standard stage, t = theta .. 1, the same update from x(theta) with
//      the uncapped oracle; the result is y1.
//   3. Double greedy branch at x(theta):
//        p = LinearMaximize(C, grad F(x(theta)) o (1 - x(theta)), 1)
//        z = DoubleGreedyBox(f, 0, p)
//
// The best of F(y1), F(z) over all theta (and the origin) is returned.
// With alpha = 1/2 and theta = 0.18 the combination guarantees
// F(best) >= 0.372 F(OPT) in the fine-discretization limit.

#ifndef SUBMODMAX_CONTINUOUS_GREEDY_H_
#define SUBMODMAX_CONTINUOUS_GREEDY_H_

#include <optional>
#include <string>
#include <vector>

#include "submodmax/multilinear.h"
#include "submodmax/point.h"
#include "submodmax/polytope.h"
#include "submodmax/set_function.h"

namespace submodmax {

inline constexpr double kDefaultAlpha = 0.5;
inline constexpr double kDefaultDelta = 0.005;
inline constexpr char kDefaultThetaGrid[] = "0:0.02:1,+0.18";
// Slack of the l_inf envelope assertions.
inline constexpr double kEnvelopeSlack = 1e-12;

// Parses a comma separated list of items, each either a value ("0.3",
// "+0.18") or an inclusive range "start:step:stop". The result is sorted
// and deduplicated. Throws ConfigError on malformed input.
std::vector<double> ParseThetaGrid(const std::string& spec);

struct RunConfig {
  double alpha = kDefaultAlpha;
  double delta = kDefaultDelta;
  std::vector<double> theta_grid = ParseThetaGrid(kDefaultThetaGrid);
  // Estimator used for the gradient oracle. Reported values and the
  // double greedy branch always use ExactConfigFor(f).
  EstimatorConfig cfg;
  // Worker threads for the theta sweep; 0 picks the hardware count.
  int threads = 1;
  bool keep_trajectories = false;
};

// Throws ConfigError unless alpha in [1/2, 1], 1/delta is an integer,
// and every theta is a multiple of delta inside [0, 1].
void ValidateRunConfig(const RunConfig& run);

// One entry per update step; entry k describes the point before step k.
struct Trajectory {
  std::vector<double> times;
  std::vector<Point> points;
  std::vector<Point> directions;
  // <grad F(x) o (1 - x), v> at each recorded point.
  std::vector<double> inner_products;
  // Exact F at each recorded point.
  std::vector<double> values;

  std::size_t size() const { return times.size(); }
};

// Runtime invariants of one stage.
struct StageSummary {
  int steps = 0;
  // min over points and coordinates of (1 - x_i) - envelope(t); the
  // envelope holds when this is >= -kEnvelopeSlack.
  double envelope_margin = 0.0;
  // min over steps of [F(x') - F(x)] - [delta <g, v> - delta^2 n^3 M].
  double step_margin = 0.0;
  // |F(end) - F(start) - sum of per-step changes|.
  double telescoping_residual = 0.0;
  bool feasible = true;
};

struct DampenedResult {
  Point x_theta;
  // Capped oracle direction at x_theta and its inner product with the
  // residual gradient there.
  Point v_theta;
  double inner_product = 0.0;
  Trajectory trajectory;
  StageSummary summary;
};

struct StandardResult {
  Point y1;
  Trajectory trajectory;
  StageSummary summary;
};

struct BranchResult {
  Point p;
  Point z;
};

DampenedResult DampenedStage(const SetFunction& f, const Polytope& c,
                             const RunConfig& run, double theta);

// Continues from `start` = x(theta) up to t = 1 with the uncapped oracle.
StandardResult StandardStage(const SetFunction& f, const Polytope& c,
                             const RunConfig& run, const Point& start,
                             double theta);

// p from the uncapped oracle at x(theta), then double greedy on [0, p].
// A sampled `cfg` only drives the gradient; the box search is exact.
BranchResult DoubleGreedyBranch(const SetFunction& f, const Polytope& c,
                                const Point& x_theta,
                                const EstimatorConfig& cfg);

struct ThetaRecord {
  double theta = 0.0;
  Point x_theta;
  double x_theta_value = 0.0;
  Point v_theta;
  double inner_product = 0.0;
  Point y1;
  double y1_value = 0.0;
  Point p;
  Point z;
  double z_value = 0.0;
  StageSummary dampened;
  StageSummary standard;
  std::optional<Trajectory> dampened_trajectory;
  std::optional<Trajectory> standard_trajectory;
};

struct DiagnosticRecord {
  std::string name;
  // Hard failures are bugs; soft ones are informational.
  bool hard = true;
  bool passed = true;
  // Smallest (lhs - rhs) seen; negative means violated.
  double worst_margin = 0.0;
};

enum class BestSource { kOrigin, kContinuousGreedy, kDoubleGreedy };

// "origin", "continuous-greedy" or "double-greedy".
const char* BestSourceName(BestSource source);

struct SolveReport {
  Point best;
  double best_value = 0.0;
  BestSource best_source = BestSource::kOrigin;
  std::optional<double> best_theta;
  std::vector<ThetaRecord> per_theta;
  std::vector<DiagnosticRecord> diagnostics;

  bool HardDiagnosticsPass() const;
  const DiagnosticRecord* Find(const std::string& name) const;
};

// Runs every theta of the grid and returns the best solution along with
// the OPT-independent diagnostics (feasibility, envelopes, per-step value
// gains, best-value reproduction).
SolveReport Solve(const SetFunction& f, const Polytope& c,
                  const RunConfig& run);

}  // namespace submodmax

#endif  // SUBMODMAX_CONTINUOUS_GREEDY_H_
