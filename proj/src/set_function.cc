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

#include "submodmax/set_function.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "submodmax/errors.h"

namespace submodmax {
namespace {

void CheckWeight(double w, const std::string& what) {
  if (!std::isfinite(w) || w < 0.0) {
    throw InvalidArgumentError(what + " must be finite and nonnegative, got " +
                               std::to_string(w));
  }
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) {
    throw InvalidArgumentError("ground set needs n >= 1, got " +
                               std::to_string(n));
  }
}

const char* FunctionKindName(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kExplicitTable:
      return "explicit-table";
    case FunctionKind::kDirectedCut:
      return "directed-cut";
    case FunctionKind::kCoverage:
      return "coverage";
  }
  return "unknown";
}

SetFunction SetFunction::ExplicitTable(int n, std::vector<double> values) {
  GroundSet ground(n);
  if (n > kMaxTableElements) {
    throw InvalidArgumentError("explicit tables support n <= " +
                               std::to_string(kMaxTableElements));
  }
  if (values.size() != (std::size_t{1} << n)) {
    throw InvalidArgumentError("explicit table for n = " + std::to_string(n) +
                               " needs " + std::to_string(1ull << n) +
                               " values, got " + std::to_string(values.size()));
  }
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    CheckWeight(values[mask], "f(mask " + std::to_string(mask) + ")");
  }
  if (n <= kMaxCheckedTableElements) {
    double scale = 1.0;
    for (double v : values) scale = std::max(scale, v);
    if (!IsSubmodularTable(values, n, 1e-9 * scale)) {
      throw InvalidArgumentError("explicit table is not submodular");
    }
  }
  return SetFunction(ground, Table{std::move(values)});
}

SetFunction SetFunction::DirectedCut(int n, std::vector<Arc> arcs) {
  GroundSet ground(n);
  for (const Arc& a : arcs) {
    if (!ground.Contains(a.from) || !ground.Contains(a.to)) {
      throw InvalidArgumentError("arc endpoint outside ground set");
    }
    if (a.from == a.to) {
      throw InvalidArgumentError("self-loop on element " +
                                 std::to_string(a.from));
    }
    CheckWeight(a.weight, "arc weight");
  }
  return SetFunction(ground, Cut{std::move(arcs)});
}

SetFunction SetFunction::Coverage(int n, std::vector<double> item_weights,
                                  std::vector<std::vector<int>> covers) {
  GroundSet ground(n);
  if (covers.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("coverage needs one cover list per element");
  }
  for (double w : item_weights) CheckWeight(w, "item weight");
  const int m = static_cast<int>(item_weights.size());
  std::vector<std::vector<int>> covered_by(m);
  for (int i = 0; i < n; ++i) {
    std::vector<int> sorted = covers[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgumentError("element " + std::to_string(i) +
                                 " lists an item twice");
    }
    for (int item : sorted) {
      if (item < 0 || item >= m) {
        throw InvalidArgumentError("element " + std::to_string(i) +
                                   " covers unknown item " +
                                   std::to_string(item));
      }
      covered_by[item].push_back(i);
    }
  }
  std::vector<std::uint64_t> item_masks;
  if (n <= 64) {
    item_masks.resize(m, 0);
    for (int j = 0; j < m; ++j) {
      for (int i : covered_by[j]) item_masks[j] |= std::uint64_t{1} << i;
    }
  }
  return SetFunction(ground, Cover{std::move(item_weights), std::move(covers),
                                   std::move(covered_by),
                                   std::move(item_masks)});
}

FunctionKind SetFunction::kind() const {
  switch (payload_.index()) {
    case 0:
      return FunctionKind::kExplicitTable;
    case 1:
      return FunctionKind::kDirectedCut;
    default:
      return FunctionKind::kCoverage;
  }
}

double SetFunction::Value(std::span<const std::uint8_t> members) const {
  if (members.size() != static_cast<std::size_t>(n())) {
    throw InvalidSubsetError("membership vector has wrong length");
  }
  if (const auto* t = std::get_if<Table>(&payload_)) {
    std::uint64_t mask = 0;
    for (int i = 0; i < n(); ++i) {
      if (members[i]) mask |= std::uint64_t{1} << i;
    }
    return t->values[mask];
  }
  if (const auto* c = std::get_if<Cut>(&payload_)) {
    double s = 0.0;
    for (const Arc& a : c->arcs) {
      if (members[a.from] && !members[a.to]) s += a.weight;
    }
    return s;
  }
  const auto& cov = std::get<Cover>(payload_);
  double s = 0.0;
  for (std::size_t j = 0; j < cov.item_weights.size(); ++j) {
    for (int i : cov.covered_by[j]) {
      if (members[i]) {
        s += cov.item_weights[j];
        break;
      }
    }
  }
  return s;
}

double SetFunction::ValueOfMask(std::uint64_t mask) const {
  if (const auto* t = std::get_if<Table>(&payload_)) return t->values[mask];
  if (const auto* c = std::get_if<Cut>(&payload_)) {
    double s = 0.0;
    for (const Arc& a : c->arcs) {
      if ((mask >> a.from & 1) && !(mask >> a.to & 1)) s += a.weight;
    }
    return s;
  }
  const auto& cov = std::get<Cover>(payload_);
  if (cov.item_masks.size() != cov.item_weights.size()) {
    throw ConfigError("bitmask evaluation needs n <= 64");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < cov.item_weights.size(); ++j) {
    if (mask & cov.item_masks[j]) s += cov.item_weights[j];
  }
  return s;
}

const std::vector<double>& SetFunction::table() const {
  return std::get<Table>(payload_).values;
}
const std::vector<Arc>& SetFunction::arcs() const {
  return std::get<Cut>(payload_).arcs;
}
const std::vector<double>& SetFunction::item_weights() const {
  return std::get<Cover>(payload_).item_weights;
}
const std::vector<std::vector<int>>& SetFunction::covers() const {
  return std::get<Cover>(payload_).covers;
}

double SetFunction::ClosedForm(const Point& x) const {
  if (x.size() != static_cast<std::size_t>(n())) {
    throw InvalidArgumentError("point dimension does not match ground set");
  }
  if (const auto* c = std::get_if<Cut>(&payload_)) {
    double s = 0.0;
    for (const Arc& a : c->arcs) s += a.weight * x[a.from] * (1.0 - x[a.to]);
    return s;
  }
  if (const auto* cov = std::get_if<Cover>(&payload_)) {
    double s = 0.0;
    for (std::size_t j = 0; j < cov->item_weights.size(); ++j) {
      double miss = 1.0;
      for (int i : cov->covered_by[j]) miss *= 1.0 - x[i];
      s += cov->item_weights[j] * (1.0 - miss);
    }
    return s;
  }
  throw ConfigError("closed form is only available for structural functions");
}

bool IsSubmodularTable(std::span<const double> values, int n,
                       double tolerance) {
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < full; ++s) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (s & bi) continue;
      for (int j = i + 1; j < n; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (s & bj) continue;
        if (values[s | bi] + values[s | bj] <
            values[s | bi | bj] + values[s] - tolerance) {
          return false;
        }
      }
    }
  }
  return true;
}

bool IsMonotone(const SetFunction& f, double tolerance) {
  const int n = f.n();
  if (n > 20) throw ConfigError("monotonicity check needs n <= 20");
  const std::vector<double> values = Tabulate(f);
  for (std::uint64_t s = 0; s < values.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (!(s & bi) && values[s | bi] < values[s] - tolerance) return false;
    }
  }
  return true;
}

std::vector<double> Tabulate(const SetFunction& f) {
  if (f.n() > kMaxTableElements) {
    throw ConfigError("tabulation needs n <= " +
                      std::to_string(kMaxTableElements));
  }
  if (f.kind() == FunctionKind::kExplicitTable) return f.table();
  std::vector<double> values(std::size_t{1} << f.n());
  for (std::uint64_t s = 0; s < values.size(); ++s) {
    values[s] = f.ValueOfMask(s);
  }
  return values;
}

}  // namespace submodmax
