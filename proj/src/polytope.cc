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

#include "submodmax/polytope.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "submodmax/errors.h"

namespace submodmax {
namespace {

void CheckBudget(double b, const char* what) {
  if (!std::isfinite(b) || b <= 0.0) {
    throw InvalidArgumentError(std::string(what) +
                               " must be finite and strictly positive");
  }
}

// Fractional knapsack restricted to `candidates`: fill coordinates in
// decreasing order of weight/cost, each up to min(alpha, what the budget
// still allows). cost == nullptr means unit costs.
void FillGreedy(std::vector<int> candidates, std::span<const double> weights,
                const std::vector<double>* cost, double budget, double alpha,
                std::vector<double>& out) {
  auto unit = [&](int i) { return cost ? (*cost)[i] : 1.0; };
  std::erase_if(candidates, [&](int i) { return !(weights[i] > 0.0); });
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return weights[a] / unit(a) > weights[b] / unit(b);
  });
  double remaining = budget;
  for (int i : candidates) {
    if (remaining <= 0.0) break;
    const double amount = std::min(alpha, remaining / unit(i));
    out[i] = amount;
    remaining = std::max(0.0, remaining - amount * unit(i));
  }
}

void CheckSubset(const Polytope& c, std::span<const int> subset) {
  for (int i : subset) {
    if (!c.ground().Contains(i)) {
      throw InvalidSubsetError("element " + std::to_string(i) +
                               " outside ground set of size " +
                               std::to_string(c.n()));
    }
  }
}

}  // namespace

CapParam::CapParam(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgumentError("cap alpha must lie in (0, 1], got " +
                               std::to_string(alpha));
  }
}

const char* PolytopeKindName(PolytopeKind kind) {
  switch (kind) {
    case PolytopeKind::kCardinality:
      return "cardinality";
    case PolytopeKind::kPartitionMatroid:
      return "partition-matroid";
    case PolytopeKind::kKnapsack:
      return "knapsack";
  }
  return "unknown";
}

Polytope Polytope::Cardinality(int n, double k) {
  GroundSet ground(n);
  CheckBudget(k, "cardinality budget");
  return Polytope(ground, CardinalityBody{k});
}

Polytope Polytope::PartitionMatroid(int n,
                                    std::vector<std::vector<int>> blocks,
                                    std::vector<double> budgets) {
  GroundSet ground(n);
  if (blocks.size() != budgets.size()) {
    throw InvalidArgumentError("partition matroid needs one budget per block");
  }
  std::vector<int> seen(n, 0);
  for (const auto& block : blocks) {
    for (int i : block) {
      if (!ground.Contains(i)) {
        throw InvalidArgumentError("block element " + std::to_string(i) +
                                   " outside ground set");
      }
      if (seen[i]++) {
        throw InvalidArgumentError("element " + std::to_string(i) +
                                   " appears in more than one block");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InvalidArgumentError("blocks must cover every element");
  }
  for (double b : budgets) CheckBudget(b, "block budget");
  return Polytope(ground, PartitionBody{std::move(blocks), std::move(budgets)});
}

Polytope Polytope::Knapsack(int n, std::vector<double> costs, double budget) {
  GroundSet ground(n);
  if (costs.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("knapsack needs one cost per element");
  }
  for (double c : costs) CheckBudget(c, "knapsack cost");
  CheckBudget(budget, "knapsack budget");
  return Polytope(ground, KnapsackBody{std::move(costs), budget});
}

PolytopeKind Polytope::kind() const {
  switch (body_.index()) {
    case 0:
      return PolytopeKind::kCardinality;
    case 1:
      return PolytopeKind::kPartitionMatroid;
    default:
      return PolytopeKind::kKnapsack;
  }
}

double Polytope::cardinality() const {
  return std::get<CardinalityBody>(body_).k;
}
const std::vector<std::vector<int>>& Polytope::blocks() const {
  return std::get<PartitionBody>(body_).blocks;
}
const std::vector<double>& Polytope::block_budgets() const {
  return std::get<PartitionBody>(body_).budgets;
}
const std::vector<double>& Polytope::costs() const {
  return std::get<KnapsackBody>(body_).costs;
}
double Polytope::knapsack_budget() const {
  return std::get<KnapsackBody>(body_).budget;
}

Point LinearMaximize(const Polytope& c, std::span<const double> weights,
                     CapParam cap) {
  if (weights.size() != static_cast<std::size_t>(c.n())) {
    throw InvalidArgumentError("weight vector dimension mismatch");
  }
  for (double w : weights) {
    if (!std::isfinite(w)) throw InvalidArgumentError("non-finite weight");
  }
  std::vector<double> out(c.n(), 0.0);
  std::vector<int> all(c.n());
  std::iota(all.begin(), all.end(), 0);
  switch (c.kind()) {
    case PolytopeKind::kCardinality:
      FillGreedy(all, weights, nullptr, c.cardinality(), cap.alpha(), out);
      break;
    case PolytopeKind::kPartitionMatroid:
      for (std::size_t b = 0; b < c.blocks().size(); ++b) {
        std::vector<int> block = c.blocks()[b];
        std::sort(block.begin(), block.end());
        FillGreedy(std::move(block), weights, nullptr, c.block_budgets()[b],
                   cap.alpha(), out);
      }
      break;
    case PolytopeKind::kKnapsack:
      FillGreedy(all, weights, &c.costs(), c.knapsack_budget(), cap.alpha(),
                 out);
      break;
  }
  return Point(std::move(out));
}

bool ContainsSet(const Polytope& c, std::span<const int> subset) {
  CheckSubset(c, subset);
  return ContainsPoint(c, Point::Indicator(c.n(), subset));
}

bool ContainsPoint(const Polytope& c, const Point& x) {
  if (x.size() != static_cast<std::size_t>(c.n())) {
    throw InvalidArgumentError("point dimension mismatch");
  }
  switch (c.kind()) {
    case PolytopeKind::kCardinality:
      return x.Norm1() <= c.cardinality() + kFeasibilityTolerance;
    case PolytopeKind::kPartitionMatroid:
      for (std::size_t b = 0; b < c.blocks().size(); ++b) {
        double load = 0.0;
        for (int i : c.blocks()[b]) load += x[i];
        if (load > c.block_budgets()[b] + kFeasibilityTolerance) return false;
      }
      return true;
    case PolytopeKind::kKnapsack: {
      double load = 0.0;
      for (int i = 0; i < c.n(); ++i) load += c.costs()[i] * x[i];
      return load <= c.knapsack_budget() + kFeasibilityTolerance;
    }
  }
  return false;
}

}  // namespace submodmax
