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

// Seeded random instance generators and the built-in benchmark corpus.

#ifndef SUBMODMAX_GENERATORS_H_
#define SUBMODMAX_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "submodmax/instance_io.h"
#include "submodmax/polytope.h"
#include "submodmax/set_function.h"

namespace submodmax {

// Accepts "directed-cut"/"cut", "coverage" and "explicit-table"/"table".
FunctionKind ParseFunctionKind(const std::string& name);
// Accepts "cardinality", "partition-matroid"/"partition" and "knapsack".
PolytopeKind ParsePolytopeKind(const std::string& name);

struct ConstraintSpec {
  PolytopeKind kind = PolytopeKind::kCardinality;
  // Cardinality budget, or per-block budget of a partition matroid.
  double k = 2.0;
  int blocks = 2;
  // Knapsack budget as a fraction of the total cost.
  double budget_fraction = 0.4;
};

// Random digraph (arc density ~3/(n-1), at least one arc), weights in
// (0, 1]. Needs n >= 2 so the function is non-monotone.
SetFunction RandomDirectedCut(int n, std::uint64_t seed);
// 2n items with weights in (0, 1]; every element covers at least one item.
SetFunction RandomCoverage(int n, std::uint64_t seed);
// Tabulated sum of a random coverage and (for n >= 2) a random cut.
SetFunction RandomSubmodularTable(int n, std::uint64_t seed);

Polytope RandomConstraint(int n, const ConstraintSpec& spec,
                          std::uint64_t seed);

// Deterministic in (kind, n, spec, seed). Metadata records the generator
// and seed, plus exhaustively checked monotonicity when n <= 20.
// Throws ConfigError for unsupported combinations.
InstanceFile Generate(FunctionKind kind, int n, const ConstraintSpec& spec,
                      std::uint64_t seed);

inline constexpr int kDeskCorpusSize = 54;

// Directed-cut and coverage instances with n in [6, 12] under cardinality,
// partition-matroid and knapsack constraints (every combination appears).
std::vector<InstanceFile> DeskCorpus(std::uint64_t seed);

// Returns DeskCorpus for "desk"; throws ConfigError otherwise.
std::vector<InstanceFile> NamedCorpus(const std::string& name,
                                      std::uint64_t seed);

}  // namespace submodmax

#endif  // SUBMODMAX_GENERATORS_H_
