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

#include "submodmax/property_suite.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "submodmax/double_greedy.h"
#include "submodmax/multilinear.h"
#include "submodmax/verify.h"

namespace submodmax {
namespace {

class Tally {
 public:
  Tally(std::string name, bool hard = true) {
    check_.name = std::move(name);
    check_.hard = hard;
    check_.worst_margin = std::numeric_limits<double>::infinity();
  }

  // Counts a trial; it fails when margin < -tolerance.
  void Record(double margin, double tolerance) {
    ++check_.trials;
    check_.worst_margin = std::min(check_.worst_margin, margin);
    if (margin < -tolerance) ++check_.failures;
  }

  PropertyCheck Done(int allowed_failures = 0) {
    check_.allowed_failures = allowed_failures;
    if (check_.trials == 0) check_.worst_margin = 0.0;
    return check_;
  }

 private:
  PropertyCheck check_;
};

double Uniform(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Uniform coordinates, with about one in ten snapped to 0 or 1.
Point RandomPoint(int n, std::mt19937_64& rng) {
  std::vector<double> x(n);
  for (double& xi : x) {
    const double r = Uniform(rng);
    if (r < 0.05) {
      xi = 0.0;
    } else if (r < 0.1) {
      xi = 1.0;
    } else {
      xi = Uniform(rng);
    }
  }
  return Point(std::move(x));
}

Subset RandomSubset(int n, std::mt19937_64& rng) {
  Subset s;
  for (int i = 0; i < n; ++i) {
    if (Uniform(rng) < 0.5) s.push_back(i);
  }
  return s;
}

int RandomIndex(int n, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

}  // namespace

PropertyCheck CheckVertexAgreement(const SetFunction& f) {
  Tally tally("vertex_agreement");
  const int n = f.n();
  if (n > 10) return tally.Done();
  EstimatorConfig exact;
  exact.mode = EstimatorMode::kExact;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    const double diff = Multilinear(f, Point::Indicator(n, s), exact) -
                        EvalSet(f, s);
    tally.Record(-std::abs(diff), 1e-12);
  }
  return tally.Done();
}

PropertyCheck CheckClosedFormAgreement(const SetFunction& f, int trials,
                                       std::uint64_t seed) {
  Tally tally("closed_form_vs_enumeration");
  if (!f.is_structural() || f.n() > 12) return tally.Done();
  std::mt19937_64 rng(seed);
  EstimatorConfig exact;
  exact.mode = EstimatorMode::kExact;
  EstimatorConfig closed;
  closed.mode = EstimatorMode::kClosedForm;
  for (int t = 0; t < trials; ++t) {
    const Point x = RandomPoint(f.n(), rng);
    tally.Record(-std::abs(Multilinear(f, x, closed) - Multilinear(f, x, exact)),
                 1e-9);
  }
  return tally.Done();
}

PropertyCheck CheckGradientIdentity(const SetFunction& f, int trials,
                                    std::uint64_t seed) {
  Tally tally("gradient_identity");
  std::mt19937_64 rng(seed);
  const EstimatorConfig cfg = ExactConfigFor(f);
  const int n = f.n();
  for (int t = 0; t < trials; ++t) {
    const Point x = RandomPoint(n, rng);
    const int i = RandomIndex(n, rng);
    const std::vector<double> grad = Gradient(f, x, cfg);
    const double identity =
        Multilinear(f, Join(x, Point::Indicator(n, Subset{i})), cfg) -
        Multilinear(f, Meet(x, Complement(Point::Indicator(n, Subset{i}))), cfg);
    // Multilinearity makes the one-sided difference quotient exact.
    const double step = x[i] < 0.5 ? 1.0 - x[i] : -x[i];
    const double quotient =
        (Multilinear(f, x.With(i, x[i] + step), cfg) - Multilinear(f, x, cfg)) /
        step;
    const double err = std::max(std::abs(grad[i] - identity),
                                1e-3 * std::abs(grad[i] - quotient));
    tally.Record(-err, 1e-12);
  }
  return tally.Done();
}

PropertyCheck CheckAntitoneGradient(const SetFunction& f, int trials,
                                    std::uint64_t seed) {
  Tally tally("antitone_gradient");
  std::mt19937_64 rng(seed);
  const EstimatorConfig cfg = ExactConfigFor(f);
  const int n = f.n();
  for (int t = 0; t < trials; ++t) {
    const Point x = RandomPoint(n, rng);
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[i] = x[i] + Uniform(rng) * (1.0 - x[i]);
    const std::vector<double> gx = Gradient(f, x, cfg);
    const std::vector<double> gy = Gradient(f, Point(y), cfg);
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) margin = std::min(margin, gx[i] - gy[i]);
    tally.Record(margin, 1e-9);
  }
  return tally.Done();
}

PropertyCheck CheckDirectionalConcavity(const SetFunction& f, int trials,
                                        std::uint64_t seed) {
  Tally tally("directional_concavity");
  std::mt19937_64 rng(seed);
  const EstimatorConfig cfg = ExactConfigFor(f);
  const int n = f.n();
  constexpr int kInterior = 50;
  for (int t = 0; t < trials; ++t) {
    const Point x = RandomPoint(n, rng);
    std::vector<double> d(n);
    double reach = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      d[i] = Uniform(rng);
      if (d[i] > 0.0) reach = std::min(reach, (1.0 - x[i]) / d[i]);
    }
    if (!(reach > 0.0) || !std::isfinite(reach)) {
      tally.Record(0.0, 0.0);
      continue;
    }
    const double h = reach / (kInterior + 1);
    auto value_at = [&](int k) {
      std::vector<double> p(n);
      for (int i = 0; i < n; ++i) {
        p[i] = std::min(1.0, x[i] + k * h * d[i]);
      }
      return Multilinear(f, Point(std::move(p)), cfg);
    };
    std::vector<double> values(kInterior + 2);
    for (int k = 0; k <= kInterior + 1; ++k) values[k] = value_at(k);
    double margin = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= kInterior; ++k) {
      margin = std::min(margin,
                        -(values[k - 1] - 2.0 * values[k] + values[k + 1]));
    }
    tally.Record(margin, 1e-9);
  }
  return tally.Done();
}

PropertyCheck CheckCoordinateIdentity(const SetFunction& f, int trials,
                                      std::uint64_t seed) {
  Tally tally("coordinate_identity");
  std::mt19937_64 rng(seed);
  const EstimatorConfig cfg = ExactConfigFor(f);
  const int n = f.n();
  for (int t = 0; t < trials; ++t) {
    const Point x = RandomPoint(n, rng);
    const int i = RandomIndex(n, rng);
    const double step = -x[i] + Uniform(rng);  // in [-x_i, 1 - x_i]
    const double lhs =
        Multilinear(f, x.With(i, x[i] + step), cfg) - Multilinear(f, x, cfg);
    const double rhs = step * (Multilinear(f, x.With(i, 1.0), cfg) -
                               Multilinear(f, x.With(i, 0.0), cfg));
    tally.Record(-std::abs(lhs - rhs), 1e-12);
  }
  return tally.Done();
}

PropertyCheck CheckSmoothness(const SetFunction& f, int trials,
                              std::uint64_t seed) {
  Tally tally("smoothness");
  std::mt19937_64 rng(seed);
  const EstimatorConfig cfg = ExactConfigFor(f);
  const int n = f.n();
  const double m = MaxSingleton(f);
  for (int t = 0; t < trials; ++t) {
    const double delta = 0.2 * Uniform(rng) + 1e-6;
    const Point u = RandomPoint(n, rng);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = std::min(1.0, u[i] + delta * Uniform(rng));
    const double change =
        std::abs(Multilinear(f, Point(v), cfg) - Multilinear(f, u, cfg));
    tally.Record(delta * n * n * m - change, 1e-12);
  }
  return tally.Done();
}

PropertyCheck CheckXOrOptSweep(const SetFunction& f, int trials,
                               std::uint64_t seed) {
  Tally tally("x_or_opt");
  std::mt19937_64 rng(seed);
  const EstimatorConfig cfg = ExactConfigFor(f);
  const int n = f.n();
  for (int t = 0; t < trials; ++t) {
    const Point x = RandomPoint(n, rng);
    const Subset s = RandomSubset(n, rng);
    const double lhs = Multilinear(f, Join(x, Point::Indicator(n, s)), cfg);
    const double rhs = (1.0 - x.NormInf()) * EvalSet(f, s);
    // The library predicate must agree with the explicit margin.
    const bool agrees = CheckXOrOpt(f, x, s) == (lhs - rhs >= -1e-9);
    tally.Record(agrees ? lhs - rhs : -1.0, 1e-9);
  }
  return tally.Done();
}

PropertyCheck CheckMonteCarlo(const SetFunction& f, int trials,
                              std::int64_t samples, std::uint64_t seed) {
  Tally tally("monte_carlo_4se");
  std::mt19937_64 rng(seed);
  const EstimatorConfig exact = ExactConfigFor(f);
  for (int t = 0; t < trials; ++t) {
    const Point x = RandomPoint(f.n(), rng);
    EstimatorConfig mc;
    mc.mode = EstimatorMode::kMonteCarlo;
    mc.sample_count = samples;
    mc.rng_seed = DeriveSeed(seed, static_cast<std::uint64_t>(t));
    const Estimate est = EstimateMultilinear(f, x, mc);
    const double deviation = std::abs(est.mean - Multilinear(f, x, exact));
    tally.Record(4.0 * est.std_error - deviation, 1e-12);
  }
  return tally.Done(/*allowed_failures=*/1);
}

std::vector<PropertyCheck> CheckDoubleGreedy(const SetFunction& f, int trials,
                                             std::uint64_t seed) {
  Tally guarantee("dg_guarantee");
  Tally nesting("dg_interval_nesting");
  Tally per_step("dg_step_inequality");
  Tally ab("dg_ab_submodularity");
  const int n = f.n();
  if (n <= 10) {
    std::mt19937_64 rng(seed);
    const EstimatorConfig cfg = ExactConfigFor(f);
    for (int t = 0; t < trials; ++t) {
      const Point u = RandomPoint(n, rng);
      std::vector<double> vc(n);
      for (int i = 0; i < n; ++i) {
        vc[i] = Uniform(rng) < 0.2 ? u[i] : u[i] + Uniform(rng) * (1.0 - u[i]);
      }
      const Point v(vc);
      std::vector<DoubleGreedyStep> trace;
      const Point out = DoubleGreedyBox(f, u, v, cfg, &trace);
      const BoxOptimum opt = BruteForceBoxOpt(f, u, v);
      const double fu = Multilinear(f, u, cfg);
      const double fv = Multilinear(f, v, cfg);
      guarantee.Record(Multilinear(f, out, cfg) - GuaranteeFloor(fu, fv, opt.value),
                       1e-9);

      Point prev_u = u;
      Point prev_v = v;
      Point prev_opt = opt.x;
      double nest_margin = std::numeric_limits<double>::infinity();
      double step_margin = std::numeric_limits<double>::infinity();
      double ab_margin = std::numeric_limits<double>::infinity();
      for (const DoubleGreedyStep& s : trace) {
        const bool nested = LessEq(prev_u, s.u) && LessEq(s.u, s.v) &&
                            LessEq(s.v, prev_v) &&
                            s.u[s.coordinate] == s.v[s.coordinate];
        nest_margin = std::min(nest_margin, nested ? 0.0 : -1.0);
        const Point cur_opt = Meet(Join(opt.x, s.u), s.v);
        const double lhs =
            Multilinear(f, prev_opt, cfg) - Multilinear(f, cur_opt, cfg);
        const double rhs =
            0.5 * (Multilinear(f, s.u, cfg) - Multilinear(f, prev_u, cfg) +
                   Multilinear(f, s.v, cfg) - Multilinear(f, prev_v, cfg));
        step_margin = std::min(step_margin, rhs - lhs);
        ab_margin = std::min(ab_margin, s.a + s.b);
        prev_u = s.u;
        prev_v = s.v;
        prev_opt = cur_opt;
      }
      nesting.Record(nest_margin, 0.0);
      per_step.Record(step_margin, 1e-9);
      ab.Record(ab_margin, 1e-9);
    }
  }
  return {guarantee.Done(), nesting.Done(), per_step.Done(), ab.Done()};
}

std::vector<PropertyCheck> CheckPolytopeOracle(const Polytope& c, int trials,
                                               std::uint64_t seed) {
  Tally optimality("oracle_optimality");
  Tally feasibility("oracle_feasibility");
  Tally dominance("oracle_alpha_dominance");
  Tally down_closed("down_closed");
  std::mt19937_64 rng(seed);
  const int n = c.n();
  constexpr double kAlphas[] = {0.5, 0.7, 1.0};
  for (int t = 0; t < trials; ++t) {
    std::vector<double> w(n);
    for (double& wi : w) {
      wi = Uniform(rng) < 0.1 ? 0.0 : 2.0 * Uniform(rng) - 1.0;
    }
    const double alpha = kAlphas[t % 3];
    const Point x = LinearMaximize(c, w, CapParam(alpha));
    const double obj = Dot(w, x.coords());
    if (n <= 8) {
      optimality.Record(-std::abs(obj - BruteForceLinearOpt(c, w, alpha)), 1e-7);
    }
    feasibility.Record(
        ContainsPoint(c, x) && x.NormInf() <= alpha + 1e-12 ? 0.0 : -1.0, 0.0);
    const double full = Dot(w, LinearMaximize(c, w, CapParam(1.0)).coords());
    const double half = Dot(w, LinearMaximize(c, w, CapParam(0.5)).coords());
    dominance.Record(full - half, 1e-12);

    // Shrink a member of C coordinatewise; it must stay in C.
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[i] = x[i] * Uniform(rng);
    down_closed.Record(ContainsPoint(c, Point(y)) ? 0.0 : -1.0, 0.0);
    const Point r = RandomPoint(n, rng);
    if (ContainsPoint(c, r)) {
      for (int i = 0; i < n; ++i) y[i] = r[i] * Uniform(rng);
      down_closed.Record(ContainsPoint(c, Point(y)) ? 0.0 : -1.0, 0.0);
    }
  }
  return {optimality.Done(), feasibility.Done(), dominance.Done(),
          down_closed.Done()};
}

std::vector<PropertyCheck> RunPropertySuite(const SetFunction& f,
                                            const Polytope& c,
                                            const SuiteOptions& options) {
  std::vector<PropertyCheck> out;
  const std::uint64_t s = options.seed;
  const int trials = options.trials;
  if (f.n() <= 10) out.push_back(CheckVertexAgreement(f));
  if (f.is_structural() && f.n() <= 12) {
    out.push_back(CheckClosedFormAgreement(f, 100, DeriveSeed(s, 1)));
  }
  out.push_back(CheckGradientIdentity(f, trials, DeriveSeed(s, 2)));
  out.push_back(CheckAntitoneGradient(f, trials, DeriveSeed(s, 3)));
  out.push_back(CheckDirectionalConcavity(f, trials, DeriveSeed(s, 4)));
  out.push_back(CheckCoordinateIdentity(f, trials, DeriveSeed(s, 5)));
  out.push_back(CheckSmoothness(f, trials, DeriveSeed(s, 6)));
  out.push_back(CheckXOrOptSweep(f, trials, DeriveSeed(s, 7)));
  if (f.n() <= 10) {
    for (auto& check : CheckDoubleGreedy(f, options.box_trials, DeriveSeed(s, 8))) {
      out.push_back(std::move(check));
    }
  }
  for (auto& check : CheckPolytopeOracle(c, options.oracle_trials, DeriveSeed(s, 9))) {
    if (check.trials > 0) out.push_back(std::move(check));
  }
  if (options.include_monte_carlo) {
    out.push_back(CheckMonteCarlo(f, 100, 100000, DeriveSeed(s, 10)));
  }
  return out;
}

}  // namespace submodmax
