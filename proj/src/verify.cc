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

#include "submodmax/verify.h"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "submodmax/errors.h"
#include "submodmax/multilinear.h"

namespace submodmax {
namespace {

void CheckBruteForceSize(int n) {
  if (n > kMaxBruteForceElements) {
    throw ConfigError("brute force needs n <= " +
                      std::to_string(kMaxBruteForceElements) + ", got " +
                      std::to_string(n));
  }
}

Subset MaskToSubset(std::uint64_t mask, int n) {
  Subset s;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) s.push_back(i);
  }
  return s;
}

struct Row {
  std::vector<double> a;
  double b;
};

std::vector<Row> InequalitySystem(const Polytope& c, double alpha) {
  const int n = c.n();
  std::vector<Row> rows;
  for (int i = 0; i < n; ++i) {
    Row lower{std::vector<double>(n, 0.0), 0.0};
    lower.a[i] = -1.0;
    rows.push_back(lower);
    Row upper{std::vector<double>(n, 0.0), alpha};
    upper.a[i] = 1.0;
    rows.push_back(upper);
  }
  switch (c.kind()) {
    case PolytopeKind::kCardinality:
      rows.push_back({std::vector<double>(n, 1.0), c.cardinality()});
      break;
    case PolytopeKind::kPartitionMatroid:
      for (std::size_t b = 0; b < c.blocks().size(); ++b) {
        Row row{std::vector<double>(n, 0.0), c.block_budgets()[b]};
        for (int i : c.blocks()[b]) row.a[i] = 1.0;
        rows.push_back(row);
      }
      break;
    case PolytopeKind::kKnapsack:
      rows.push_back({c.costs(), c.knapsack_budget()});
      break;
  }
  return rows;
}

// Solves the square system in place by Gaussian elimination with partial
// pivoting. Returns false when it is (numerically) singular.
bool SolveSquare(std::vector<std::vector<double>> a, std::vector<double> b,
                 std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
      b[r] -= factor * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return true;
}

double Slack(const RunConfig& run, const SetFunction& f) {
  const double n = f.n();
  return 2.0 * run.delta * n * n * n * MaxSingleton(f);
}

}  // namespace

IntegralOptimum BruteForceOpt(const SetFunction& f, const Polytope& c) {
  if (f.n() != c.n()) {
    throw InvalidArgumentError("function and polytope ground sets differ");
  }
  const int n = f.n();
  CheckBruteForceSize(n);
  IntegralOptimum best;
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset s = MaskToSubset(mask, n);
    if (!ContainsSet(c, s)) continue;
    const double value = f.ValueOfMask(mask);
    if (!found || value > best.value) {
      best = {s, value};
      found = true;
    }
  }
  return best;
}

BoxOptimum BruteForceBoxOpt(const SetFunction& f, const Point& u,
                            const Point& v) {
  const int n = f.n();
  CheckBruteForceSize(n);
  if (u.size() != static_cast<std::size_t>(n) ||
      v.size() != static_cast<std::size_t>(n) || !LessEq(u, v)) {
    throw InvalidBoxError("box needs u <= v with n coordinates");
  }
  const EstimatorConfig exact = ExactConfigFor(f);
  BoxOptimum best;
  int best_at_v = -1;
  std::vector<double> corner(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) corner[i] = (mask >> i & 1) ? v[i] : u[i];
    Point x(corner);
    const double value = Multilinear(f, x, exact);
    const int at_v = std::popcount(mask);
    if (best_at_v < 0 || value > best.value ||
        (value == best.value && at_v > best_at_v)) {
      best = {std::move(x), value};
      best_at_v = at_v;
    }
  }
  return best;
}

double BruteForceLinearOpt(const Polytope& c, std::span<const double> weights,
                           double alpha) {
  const int n = c.n();
  if (n > 8) throw ConfigError("LP vertex enumeration needs n <= 8");
  const std::vector<Row> rows = InequalitySystem(c, alpha);
  const int m = static_cast<int>(rows.size());
  double best = 0.0;  // the origin is always feasible
  std::vector<int> pick(n);
  // Enumerate n-subsets of the rows in lexicographic order.
  for (int i = 0; i < n; ++i) pick[i] = i;
  std::vector<double> x;
  while (true) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int r : pick) {
      a.push_back(rows[r].a);
      b.push_back(rows[r].b);
    }
    if (SolveSquare(a, b, x)) {
      bool feasible = true;
      for (const Row& row : rows) {
        double lhs = 0.0;
        for (int i = 0; i < n; ++i) lhs += row.a[i] * x[i];
        if (lhs > row.b + 1e-9) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        double obj = 0.0;
        for (int i = 0; i < n; ++i) obj += weights[i] * x[i];
        best = std::max(best, obj);
      }
    }
    int k = n - 1;
    while (k >= 0 && pick[k] == m - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

double ComputeBound(double alpha, double theta) {
  if (!(alpha >= 0.5 && alpha <= 1.0) || !(theta >= 0.0 && theta <= 1.0)) {
    throw InvalidArgumentError("bound needs alpha in [1/2, 1], theta in [0, 1]");
  }
  const double damped = std::exp((1.0 - alpha) * theta - 1.0);
  const double late = std::exp(theta - 1.0);
  const double numerator =
      (1.0 - theta) * damped +
      (damped * (alpha * (theta - 2.0) + 1.0) + late * (2.0 * alpha - 1.0)) /
          (alpha * alpha);
  const double denominator =
      2.0 * (1.0 - alpha) * theta * late + std::exp(theta);
  return numerator / denominator;
}

std::pair<double, double> BestBound(double alpha,
                                    std::span<const double> grid) {
  std::pair<double, double> best{0.0, -std::numeric_limits<double>::infinity()};
  for (double theta : grid) {
    const double value = ComputeBound(alpha, theta);
    if (value > best.second) best = {theta, value};
  }
  return best;
}

bool CheckXOrOpt(const SetFunction& f, const Point& x,
                 std::span<const int> subset) {
  const Point joined = Join(x, Point::Indicator(f.n(), subset));
  const double lhs = Multilinear(f, joined, ExactConfigFor(f));
  return lhs >= (1.0 - x.NormInf()) * EvalSet(f, subset) - 1e-9;
}

void AddOptDiagnostics(SolveReport& report, const SetFunction& f,
                       const RunConfig& run, double opt_value) {
  const double slack = Slack(run, f);
  const double alpha = run.alpha;
  double y_margin = std::numeric_limits<double>::infinity();
  double z_margin = std::numeric_limits<double>::infinity();
  for (const ThetaRecord& rec : report.per_theta) {
    const double theta = rec.theta;
    const double y_bound =
        std::exp(theta - 1.0) *
        ((1.0 - theta) * std::exp(-alpha * theta) * opt_value +
         rec.x_theta_value);
    y_margin = std::min(y_margin, rec.y1_value - y_bound);
    if (alpha < 1.0) {
      const double z_bound = (std::exp(-alpha * theta) * opt_value -
                              rec.x_theta_value - rec.inner_product) /
                             (2.0 * (1.0 - alpha));
      z_margin = std::min(z_margin, rec.z_value - z_bound);
    }
  }
  report.diagnostics.push_back(
      {"y1_bound", true, y_margin >= -slack, y_margin + slack});
  report.diagnostics.push_back(
      {"y1_bound_tight", false, y_margin >= -1e-12, y_margin});
  if (alpha < 1.0) {
    report.diagnostics.push_back(
        {"z_bound", true, z_margin >= -slack, z_margin + slack});
    report.diagnostics.push_back(
        {"z_bound_tight", false, z_margin >= -1e-12, z_margin});
  }
  const double bound = BestBound(alpha, run.theta_grid).second;
  const double ratio_margin = report.best_value - bound * opt_value;
  report.diagnostics.push_back(
      {"ratio_vs_bound", false, ratio_margin >= -1e-9, ratio_margin});
}

}  // namespace submodmax
