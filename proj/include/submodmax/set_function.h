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

// Nonnegative submodular set functions f: 2^V -> R+ over V = {0, ..., n-1}.
//
// Three concrete families are supported:
//   * explicit tables with one value per subset, indexed by the subset
//     bitmask (bit i set <=> element i in the subset);
//   * weighted directed cut functions, f(S) = sum of w(i->j) over arcs with
//     i in S and j not in S;
//   * weighted coverage functions, f(S) = total weight of the items covered
//     by at least one element of S.
// Structural families are submodular by construction. Explicit tables are
// validated exhaustively on construction (nonnegativity always, submodularity
// up to kMaxCheckedTableElements).

#ifndef SUBMODMAX_SET_FUNCTION_H_
#define SUBMODMAX_SET_FUNCTION_H_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "submodmax/point.h"

namespace submodmax {

inline constexpr int kMaxTableElements = 25;
inline constexpr int kMaxCheckedTableElements = 12;

class GroundSet {
 public:
  // Throws InvalidArgumentError unless n >= 1.
  explicit GroundSet(int n);
  int size() const { return n_; }
  bool Contains(int i) const { return i >= 0 && i < n_; }
  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
};

struct Arc {
  int from;
  int to;
  double weight;
  bool operator==(const Arc&) const = default;
};

enum class FunctionKind { kExplicitTable, kDirectedCut, kCoverage };

const char* FunctionKindName(FunctionKind kind);

class SetFunction {
 public:
  // `values` must have exactly 2^n finite nonnegative entries.
  static SetFunction ExplicitTable(int n, std::vector<double> values);
  // Arcs must have distinct endpoints inside [0, n) and nonnegative weights.
  // Parallel arcs are allowed and add up.
  static SetFunction DirectedCut(int n, std::vector<Arc> arcs);
  // covers[i] lists the items covered by element i (no repeats);
  // item_weights are nonnegative.
  static SetFunction Coverage(int n, std::vector<double> item_weights,
                              std::vector<std::vector<int>> covers);

  int n() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  FunctionKind kind() const;
  bool is_structural() const { return kind() != FunctionKind::kExplicitTable; }

  // f(S) for a membership vector of length n (nonzero = member).
  double Value(std::span<const std::uint8_t> members) const;
  // f(S) for a bitmask; requires n <= 64.
  double ValueOfMask(std::uint64_t mask) const;

  // Payload accessors; each throws std::bad_variant_access on a kind
  // mismatch.
  const std::vector<double>& table() const;
  const std::vector<Arc>& arcs() const;
  const std::vector<double>& item_weights() const;
  const std::vector<std::vector<int>>& covers() const;

  // Closed-form multilinear extension (structural kinds only).
  double ClosedForm(const Point& x) const;

 private:
  struct Table {
    std::vector<double> values;
  };
  struct Cut {
    std::vector<Arc> arcs;
  };
  struct Cover {
    std::vector<double> item_weights;
    std::vector<std::vector<int>> covers;
    // Inverse incidence: elements covering each item.
    std::vector<std::vector<int>> covered_by;
    // Element bitmask per item, filled when n <= 64.
    std::vector<std::uint64_t> item_masks;
  };

  SetFunction(GroundSet ground, std::variant<Table, Cut, Cover> payload)
      : ground_(ground), payload_(std::move(payload)) {}

  GroundSet ground_;
  std::variant<Table, Cut, Cover> payload_;
};

// Exhaustive check of f(S+i) + f(S+j) >= f(S+i+j) + f(S) over all S and
// i, j not in S, which is equivalent to the lattice form of submodularity.
// `values` is a bitmask-indexed table of size 2^n.
bool IsSubmodularTable(std::span<const double> values, int n,
                       double tolerance = 1e-9);

// Exhaustive f(S+i) >= f(S) check; requires n <= 20.
bool IsMonotone(const SetFunction& f, double tolerance = 1e-12);

// Materializes f into a bitmask-indexed table; requires n <= 25.
std::vector<double> Tabulate(const SetFunction& f);

}  // namespace submodmax

#endif  // SUBMODMAX_SET_FUNCTION_H_
