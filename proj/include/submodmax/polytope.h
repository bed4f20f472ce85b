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

// Down-closed packing polytopes with an exact capped linear maximization
// oracle:
//
//   LinearMaximize(C, w, alpha) = argmax { <w, c> : c in C, |c|_inf <= alpha }
//
// Supported bodies, all inside [0,1]^n:
//   cardinality         sum_i c_i <= k
//   partition matroid   sum_{i in B} c_i <= k_B for every block B
//   knapsack            sum_i cost_i c_i <= budget, cost_i > 0
//
// Each capped LP is a fractional knapsack (per block for partition
// matroids) and is solved greedily. Coordinates with w_i <= 0 are left at
// zero. Ties go to the lower index.

#ifndef SUBMODMAX_POLYTOPE_H_
#define SUBMODMAX_POLYTOPE_H_

#include <span>
#include <variant>
#include <vector>

#include "submodmax/point.h"
#include "submodmax/set_function.h"

namespace submodmax {

inline constexpr double kFeasibilityTolerance = 1e-9;

// The l_inf cap alpha in (0, 1]. alpha = 1 is the uncapped oracle.
class CapParam {
 public:
  explicit CapParam(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

enum class PolytopeKind { kCardinality, kPartitionMatroid, kKnapsack };

const char* PolytopeKindName(PolytopeKind kind);

class Polytope {
 public:
  static Polytope Cardinality(int n, double k);
  // `blocks` must partition {0, ..., n-1}; one positive budget per block.
  static Polytope PartitionMatroid(int n, std::vector<std::vector<int>> blocks,
                                   std::vector<double> budgets);
  static Polytope Knapsack(int n, std::vector<double> costs, double budget);

  int n() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  PolytopeKind kind() const;

  // Payload accessors; throw std::bad_variant_access on a kind mismatch.
  double cardinality() const;
  const std::vector<std::vector<int>>& blocks() const;
  const std::vector<double>& block_budgets() const;
  const std::vector<double>& costs() const;
  double knapsack_budget() const;

 private:
  struct CardinalityBody {
    double k;
  };
  struct PartitionBody {
    std::vector<std::vector<int>> blocks;
    std::vector<double> budgets;
  };
  struct KnapsackBody {
    std::vector<double> costs;
    double budget;
  };

  Polytope(GroundSet ground,
           std::variant<CardinalityBody, PartitionBody, KnapsackBody> body)
      : ground_(ground), body_(std::move(body)) {}

  GroundSet ground_;
  std::variant<CardinalityBody, PartitionBody, KnapsackBody> body_;
};

Point LinearMaximize(const Polytope& c, std::span<const double> weights,
                     CapParam cap);

// 1_S in C. Throws InvalidSubsetError for indices outside the ground set.
bool ContainsSet(const Polytope& c, std::span<const int> subset);

// x in C, up to kFeasibilityTolerance on every defining inequality.
bool ContainsPoint(const Polytope& c, const Point& x);

}  // namespace submodmax

#endif  // SUBMODMAX_POLYTOPE_H_
