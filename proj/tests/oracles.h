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

// Deliberately naive reference computations used as test oracles. None of
// them shares code with the library beyond evaluating f on a set.

#ifndef SUBMODMAX_TESTS_ORACLES_H_
#define SUBMODMAX_TESTS_ORACLES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "submodmax/set_function.h"

namespace submodmax::testing {

// Sum over all 2^n subsets of f(S) P[R(x) = S].
inline double NaiveMultilinear(const SetFunction& f,
                               const std::vector<double>& x) {
  const int n = f.n();
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) {
      p *= (mask >> i & 1) ? x[i] : 1.0 - x[i];
    }
    total += p * f.ValueOfMask(mask);
  }
  return total;
}

// Directed cut value straight from the arc list.
inline double NaiveCut(const std::vector<Arc>& arcs,
                       const std::vector<int>& members) {
  double v = 0.0;
  for (const Arc& a : arcs) {
    if (members[a.from] && !members[a.to]) v += a.weight;
  }
  return v;
}

// Random nonnegative submodular table: a random coverage function plus a
// random cut, both built here from scratch.
inline std::vector<double> RandomSubmodularValues(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int items = n + 2;
  std::vector<double> w(items);
  for (double& x : w) x = u(rng);
  std::vector<std::vector<int>> cov(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < items; ++j) {
      if (u(rng) < 0.4) cov[i].push_back(j);
    }
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && u(rng) < 0.3) arcs.push_back({i, j, u(rng)});
    }
  }
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    std::vector<int> members(n);
    std::vector<int> hit(items, 0);
    for (int i = 0; i < n; ++i) {
      members[i] = mask >> i & 1;
      if (members[i]) {
        for (int j : cov[i]) hit[j] = 1;
      }
    }
    double v = NaiveCut(arcs, members);
    for (int j = 0; j < items; ++j) v += hit[j] * w[j];
    values[mask] = v;
  }
  return values;
}

}  // namespace submodmax::testing

#endif  // SUBMODMAX_TESTS_ORACLES_H_
