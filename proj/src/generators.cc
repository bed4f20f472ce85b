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

#include "submodmax/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "submodmax/errors.h"
#include "submodmax/multilinear.h"

namespace submodmax {
namespace {

// Purpose labels for seed derivation.
constexpr std::uint64_t kFunctionStream = 101;
constexpr std::uint64_t kConstraintStream = 102;
constexpr std::uint64_t kTableCutStream = 103;
constexpr std::uint64_t kCorpusStream = 104;

double Unit(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Uniform on (0, 1].
double PositiveWeight(std::mt19937_64& rng) { return 1.0 - Unit(rng); }

const char* ShortKindName(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kExplicitTable:
      return "table";
    case FunctionKind::kDirectedCut:
      return "cut";
    case FunctionKind::kCoverage:
      return "coverage";
  }
  return "unknown";
}

}  // namespace

FunctionKind ParseFunctionKind(const std::string& name) {
  if (name == "directed-cut" || name == "cut") return FunctionKind::kDirectedCut;
  if (name == "coverage") return FunctionKind::kCoverage;
  if (name == "explicit-table" || name == "table") {
    return FunctionKind::kExplicitTable;
  }
  throw ConfigError("unknown function kind '" + name + "'");
}

PolytopeKind ParsePolytopeKind(const std::string& name) {
  if (name == "cardinality") return PolytopeKind::kCardinality;
  if (name == "partition-matroid" || name == "partition") {
    return PolytopeKind::kPartitionMatroid;
  }
  if (name == "knapsack") return PolytopeKind::kKnapsack;
  throw ConfigError("unknown constraint kind '" + name + "'");
}

SetFunction RandomDirectedCut(int n, std::uint64_t seed) {
  if (n < 2) throw ConfigError("directed-cut instances need n >= 2");
  std::mt19937_64 rng(seed);
  const double density = std::min(1.0, 3.0 / (n - 1));
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && Unit(rng) < density) {
        arcs.push_back({i, j, PositiveWeight(rng)});
      }
    }
  }
  if (arcs.empty()) arcs.push_back({0, 1, PositiveWeight(rng)});
  return SetFunction::DirectedCut(n, std::move(arcs));
}

SetFunction RandomCoverage(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int items = 2 * n;
  std::vector<double> weights(items);
  for (double& w : weights) w = PositiveWeight(rng);
  std::vector<std::vector<int>> covers(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < items; ++j) {
      if (Unit(rng) < 0.3) covers[i].push_back(j);
    }
    if (covers[i].empty()) {
      covers[i].push_back(std::uniform_int_distribution<int>(0, items - 1)(rng));
    }
  }
  return SetFunction::Coverage(n, std::move(weights), std::move(covers));
}

SetFunction RandomSubmodularTable(int n, std::uint64_t seed) {
  if (n > kMaxTableElements) {
    throw ConfigError("explicit tables need n <= " +
                      std::to_string(kMaxTableElements));
  }
  std::vector<double> values = Tabulate(RandomCoverage(n, seed));
  if (n >= 2) {
    const std::vector<double> cut =
        Tabulate(RandomDirectedCut(n, DeriveSeed(seed, kTableCutStream)));
    for (std::size_t s = 0; s < values.size(); ++s) values[s] += cut[s];
  }
  // Sums of submodular parts are submodular; the constructor re-checks
  // exhaustively for small n.
  return SetFunction::ExplicitTable(n, std::move(values));
}

Polytope RandomConstraint(int n, const ConstraintSpec& spec,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (spec.kind) {
    case PolytopeKind::kCardinality:
      return Polytope::Cardinality(n, spec.k);
    case PolytopeKind::kPartitionMatroid: {
      if (spec.blocks < 1) throw ConfigError("partition needs >= 1 block");
      const int blocks = std::min(spec.blocks, n);
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<std::vector<int>> parts(blocks);
      for (int pos = 0; pos < n; ++pos) parts[pos % blocks].push_back(order[pos]);
      for (auto& part : parts) std::sort(part.begin(), part.end());
      return Polytope::PartitionMatroid(n, std::move(parts),
                                        std::vector<double>(blocks, spec.k));
    }
    case PolytopeKind::kKnapsack: {
      if (!(spec.budget_fraction > 0.0)) {
        throw ConfigError("knapsack budget fraction must be positive");
      }
      std::vector<double> costs(n);
      for (double& c : costs) c = 0.2 + 0.8 * Unit(rng);
      const double total = std::accumulate(costs.begin(), costs.end(), 0.0);
      return Polytope::Knapsack(n, std::move(costs),
                                spec.budget_fraction * total);
    }
  }
  throw ConfigError("unsupported constraint kind");
}

InstanceFile Generate(FunctionKind kind, int n, const ConstraintSpec& spec,
                      std::uint64_t seed) {
  if (n < 1) throw ConfigError("n must be positive");
  const std::uint64_t fseed = DeriveSeed(seed, kFunctionStream);
  SetFunction f = [&] {
    switch (kind) {
      case FunctionKind::kDirectedCut:
        return RandomDirectedCut(n, fseed);
      case FunctionKind::kCoverage:
        return RandomCoverage(n, fseed);
      case FunctionKind::kExplicitTable:
        return RandomSubmodularTable(n, fseed);
    }
    throw ConfigError("unsupported function kind");
  }();
  Polytope c = RandomConstraint(n, spec, DeriveSeed(seed, kConstraintStream));

  std::ostringstream name;
  name << ShortKindName(kind) << "-n" << n << "-" << PolytopeKindName(spec.kind)
       << "-s" << seed;
  InstanceMetadata meta;
  meta.generator = std::string("gen/") + FunctionKindName(kind);
  meta.seed = seed;
  if (n <= 20) meta.monotone = IsMonotone(f);
  return InstanceFile{kInstanceSchemaVersion, name.str(), std::move(f),
                      std::move(c), std::move(meta)};
}

std::vector<InstanceFile> DeskCorpus(std::uint64_t seed) {
  constexpr PolytopeKind kKinds[] = {PolytopeKind::kCardinality,
                                     PolytopeKind::kPartitionMatroid,
                                     PolytopeKind::kKnapsack};
  std::vector<InstanceFile> corpus;
  for (int idx = 0; idx < kDeskCorpusSize; ++idx) {
    const std::uint64_t s = DeriveSeed(DeriveSeed(seed, kCorpusStream), idx);
    std::mt19937_64 rng(s);
    const int n = std::uniform_int_distribution<int>(6, 12)(rng);
    ConstraintSpec spec;
    spec.kind = kKinds[(idx / 2) % 3];
    switch (spec.kind) {
      case PolytopeKind::kCardinality:
        spec.k = std::uniform_int_distribution<int>(1, n / 2)(rng);
        break;
      case PolytopeKind::kPartitionMatroid:
        spec.blocks = std::uniform_int_distribution<int>(2, 3)(rng);
        spec.k = std::uniform_int_distribution<int>(1, 2)(rng);
        break;
      case PolytopeKind::kKnapsack:
        spec.budget_fraction = 0.2 + 0.3 * Unit(rng);
        break;
    }
    const FunctionKind kind =
        idx % 2 == 0 ? FunctionKind::kDirectedCut : FunctionKind::kCoverage;
    InstanceFile inst = Generate(kind, n, spec, s);
    inst.name = "desk" + std::to_string(idx) + "-" + inst.name;
    corpus.push_back(std::move(inst));
  }
  return corpus;
}

std::vector<InstanceFile> NamedCorpus(const std::string& name,
                                      std::uint64_t seed) {
  if (name == "desk") return DeskCorpus(seed);
  throw ConfigError("unknown corpus '" + name + "' (available: desk)");
}

}  // namespace submodmax
