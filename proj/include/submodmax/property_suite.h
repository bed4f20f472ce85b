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

// Randomized property checks of the multilinear calculus, the polytope
// oracles and box double greedy, run against a concrete instance.

#ifndef SUBMODMAX_PROPERTY_SUITE_H_
#define SUBMODMAX_PROPERTY_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "submodmax/polytope.h"
#include "submodmax/set_function.h"

namespace submodmax {

struct PropertyCheck {
  std::string name;
  bool hard = true;
  int trials = 0;
  int failures = 0;
  int allowed_failures = 0;
  // Smallest (lhs - rhs) over all trials; negative means violated.
  double worst_margin = 0.0;

  bool passed() const { return failures <= allowed_failures; }
};

// Extension agrees with f on all 2^n vertices (n <= 10).
PropertyCheck CheckVertexAgreement(const SetFunction& f);
// Closed form equals enumeration at random points (structural, n <= 12).
PropertyCheck CheckClosedFormAgreement(const SetFunction& f, int trials,
                                       std::uint64_t seed);
// dF/dx_i = F(x v 1_i) - F(x ^ 1_{V-i}) against a difference quotient.
PropertyCheck CheckGradientIdentity(const SetFunction& f, int trials,
                                    std::uint64_t seed);
// x <= y implies grad F(x) >= grad F(y).
PropertyCheck CheckAntitoneGradient(const SetFunction& f, int trials,
                                    std::uint64_t seed);
// t -> F(x + t d) is concave for d >= 0 (50 interior second differences).
PropertyCheck CheckDirectionalConcavity(const SetFunction& f, int trials,
                                        std::uint64_t seed);
// F(x + s 1_i) - F(x) = s (F(x v 1_i) - F(x ^ 1_{V-i})).
PropertyCheck CheckCoordinateIdentity(const SetFunction& f, int trials,
                                      std::uint64_t seed);
// u <= v <= u + delta implies |F(v) - F(u)| <= delta n^2 M.
PropertyCheck CheckSmoothness(const SetFunction& f, int trials,
                              std::uint64_t seed);
// F(x v 1_S) >= (1 - |x|_inf) f(S).
PropertyCheck CheckXOrOptSweep(const SetFunction& f, int trials,
                               std::uint64_t seed);
// Sampled F within 4 standard errors of exact F in all but one trial.
PropertyCheck CheckMonteCarlo(const SetFunction& f, int trials,
                              std::int64_t samples, std::uint64_t seed);

// Box double greedy on random boxes: the output guarantee against corner
// enumeration, interval nesting, the per-step OPT inequality and
// a_i + b_i >= 0. Returns one check per property (n <= 10).
std::vector<PropertyCheck> CheckDoubleGreedy(const SetFunction& f, int trials,
                                             std::uint64_t seed);

// Oracle optimality against LP vertex enumeration (n <= 8), feasibility,
// alpha monotonicity and down-closedness of ContainsPoint.
std::vector<PropertyCheck> CheckPolytopeOracle(const Polytope& c, int trials,
                                               std::uint64_t seed);

struct SuiteOptions {
  int trials = 500;
  int box_trials = 100;
  int oracle_trials = 200;
  bool include_monte_carlo = false;
  std::uint64_t seed = 1;
};

// Every check whose size preconditions hold for (f, c).
std::vector<PropertyCheck> RunPropertySuite(const SetFunction& f,
                                            const Polytope& c,
                                            const SuiteOptions& options);

}  // namespace submodmax

#endif  // SUBMODMAX_PROPERTY_SUITE_H_
