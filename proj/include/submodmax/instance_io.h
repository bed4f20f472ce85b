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

// JSON instance documents (schema version 1):
//
//   {
//     "schema_version": 1,
//     "name": "cut-n6-cardinality-s7",
//     "n": 6,
//     "function": {"kind": "directed-cut",
//                  "arcs": [{"from": 0, "to": 1, "weight": 0.5}, ...]}
//              | {"kind": "coverage", "item_weights": [...],
//                 "covers": [[items of element 0], ...]}
//              | {"kind": "explicit-table", "values": [2^n values]},
//     "constraint": {"kind": "cardinality", "k": 2.0}
//                | {"kind": "partition-matroid", "blocks": [[...], ...],
//                   "budgets": [...]}
//                | {"kind": "knapsack", "costs": [...], "budget": 1.5},
//     "metadata": {"generator": "...", "seed": 7, "monotone": false}
//   }
//
// Table values are indexed by subset bitmask, bit i = element i. The
// metadata object and each of its fields are optional. Serialization is
// canonical (fixed key order, two-space indent, trailing newline), so a
// serialized document parses and re-serializes to identical bytes.

#ifndef SUBMODMAX_INSTANCE_IO_H_
#define SUBMODMAX_INSTANCE_IO_H_

#include <cstdint>
#include <optional>
#include <string>

#include "submodmax/polytope.h"
#include "submodmax/set_function.h"

namespace submodmax {

inline constexpr int kInstanceSchemaVersion = 1;

struct InstanceMetadata {
  std::string generator;
  std::optional<std::uint64_t> seed;
  std::optional<bool> monotone;
};

struct InstanceFile {
  int schema_version = kInstanceSchemaVersion;
  std::string name;
  SetFunction function;
  Polytope constraint;
  std::optional<InstanceMetadata> metadata;
};

// Throws ParseError naming the line/column or the field path at fault, and
// for unknown kinds or schema versions.
InstanceFile ParseInstance(const std::string& text);
std::string SerializeInstance(const InstanceFile& instance);

InstanceFile ReadInstanceFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

// Short human label of a constraint, e.g. "cardinality(k=2)".
std::string DescribeConstraint(const Polytope& c);

}  // namespace submodmax

#endif  // SUBMODMAX_INSTANCE_IO_H_
