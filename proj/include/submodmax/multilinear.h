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

// The multilinear extension F(x) = E[f(R(x))], where R(x) contains each
// element i independently with probability x_i, and its gradient.
//
// Three estimators are available:
//   kExact       sums f(S) * P[R(x) = S] over all subsets (n <= 25). Only
//                the fractional coordinates of x are enumerated.
//   kClosedForm  the analytically identical polynomial of a structural
//                family (directed cut, coverage); any n.
//   kMonteCarlo  mean of f over `sample_count` draws of R(x); each draw
//                compares one uniform per coordinate against x_i.
//
// Gradients always use dF/dx_i = F(x v 1_{i}) - F(x ^ 1_{V-i}), which is
// exact for multilinear functions. Under kMonteCarlo all coordinates share
// one batch of random sets (common random numbers).

#ifndef SUBMODMAX_MULTILINEAR_H_
#define SUBMODMAX_MULTILINEAR_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "submodmax/point.h"
#include "submodmax/set_function.h"

namespace submodmax {

inline constexpr int kMaxEnumerationElements = 25;

enum class EstimatorMode { kExact, kClosedForm, kMonteCarlo };

const char* EstimatorModeName(EstimatorMode mode);
// Accepts "exact", "closed" and "mc". Throws ConfigError otherwise.
EstimatorMode ParseEstimatorMode(const std::string& name);

struct EstimatorConfig {
  EstimatorMode mode = EstimatorMode::kExact;
  std::int64_t sample_count = 10000;
  std::uint64_t rng_seed = 0;
};

// Throws ConfigError when `cfg` cannot be used with `f`.
void ValidateConfig(const SetFunction& f, const EstimatorConfig& cfg);

// The exact estimator appropriate for f: closed form for structural
// families, enumeration for tables.
EstimatorConfig ExactConfigFor(const SetFunction& f);

// f(S). Throws InvalidSubsetError for indices outside the ground set or
// repeated indices.
double EvalSet(const SetFunction& f, std::span<const int> subset);

double Multilinear(const SetFunction& f, const Point& x,
                   const EstimatorConfig& cfg);

struct Estimate {
  double mean = 0.0;
  // Sample standard error of the mean; zero for exact estimators.
  double std_error = 0.0;
};

Estimate EstimateMultilinear(const SetFunction& f, const Point& x,
                             const EstimatorConfig& cfg);

std::vector<double> Gradient(const SetFunction& f, const Point& x,
                             const EstimatorConfig& cfg);

// Gradient(f, x) o (1 - x).
std::vector<double> ResidualGradient(const SetFunction& f, const Point& x,
                                     const EstimatorConfig& cfg);

// M = max_i f({i}).
double MaxSingleton(const SetFunction& f);

// Mixes a seed with a purpose label; used to fan a single user seed out
// into independent streams.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t label);

}  // namespace submodmax

#endif  // SUBMODMAX_MULTILINEAR_H_
