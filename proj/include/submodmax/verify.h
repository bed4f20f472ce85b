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

// Ground-truth oracles for small instances and the closed-form
// approximation constant of the solver.

#ifndef SUBMODMAX_VERIFY_H_
#define SUBMODMAX_VERIFY_H_

#include <span>
#include <utility>
#include <vector>

#include "submodmax/continuous_greedy.h"
#include "submodmax/point.h"
#include "submodmax/polytope.h"
#include "submodmax/set_function.h"

namespace submodmax {

inline constexpr int kMaxBruteForceElements = 20;
// The literal acceptance threshold for the approximation ratio.
inline constexpr double kTargetRatio = 0.372;

struct IntegralOptimum {
  Subset set;
  double value = 0.0;
};

// max { f(S) : 1_S in C } by enumeration; ties go to the smallest bitmask.
// Throws ConfigError for n > kMaxBruteForceElements.
IntegralOptimum BruteForceOpt(const SetFunction& f, const Polytope& c);

struct BoxOptimum {
  Point x;
  double value = 0.0;
};

// max { F(x) : u <= x <= v } over the 2^n corners (x_i in {u_i, v_i}),
// which contain an optimum. Ties go to the corner with more coordinates at
// v. Uses ExactConfigFor(f).
BoxOptimum BruteForceBoxOpt(const SetFunction& f, const Point& u,
                            const Point& v);

// max { <w, c> : c in C, 0 <= c <= alpha } by enumerating every basic
// solution of the explicit inequality system. Exponential; n <= 8.
// Returns the optimal objective value.
double BruteForceLinearOpt(const Polytope& c, std::span<const double> weights,
                           double alpha);

// Lower bound on the approximation ratio of the solver for switch time
// theta and cap alpha:
//
//   [ (1-theta) e^{(1-alpha)theta-1}
//     + (e^{(1-alpha)theta-1}(alpha(theta-2)+1) + e^{theta-1}(2alpha-1))
//       / alpha^2 ]
//   / [ 2(1-alpha) theta e^{theta-1} + e^theta ]
//
// Throws InvalidArgumentError unless alpha in [1/2, 1], theta in [0, 1].
double ComputeBound(double alpha, double theta);

// (theta, ComputeBound(alpha, theta)) maximizing the bound over `grid`.
std::pair<double, double> BestBound(double alpha, std::span<const double> grid);

// F(x v 1_S) >= (1 - |x|_inf) f(S), up to 1e-9, with exact F.
bool CheckXOrOpt(const SetFunction& f, const Point& x,
                 std::span<const int> subset);

// Appends the OPT-dependent diagnostics to `report`:
//   y1_bound / y1_bound_tight   F(y1) >= e^{theta-1}((1-theta)e^{-alpha
//                               theta} OPT + F(x_theta)) - slack
//   z_bound / z_bound_tight     F(z) >= (e^{-alpha theta} OPT - F(x_theta)
//                               - <g_theta, v_theta>) / (2(1-alpha)) - slack
//   ratio_vs_bound              F(best) >= max_theta C(alpha, theta) OPT
// The plain bound checks use slack 2 delta n^3 M and are hard; the
// _tight variants use zero slack and are soft, as is ratio_vs_bound. The
// z_bound records are skipped when alpha = 1.
void AddOptDiagnostics(SolveReport& report, const SetFunction& f,
                       const RunConfig& run, double opt_value);

}  // namespace submodmax

#endif  // SUBMODMAX_VERIFY_H_
