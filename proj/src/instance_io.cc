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

#include "submodmax/instance_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "submodmax/errors.h"

namespace submodmax {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& Field(const Json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) Fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) Fail(path + "." + key, "missing field");
  return *it;
}

double Number(const Json& v, const std::string& path) {
  if (!v.is_number()) Fail(path, "expected a number");
  return v.get<double>();
}

std::int64_t Integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) Fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::string String(const Json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "expected a string");
  return v.get<std::string>();
}

const Json& Array(const Json& v, const std::string& path) {
  if (!v.is_array()) Fail(path, "expected an array");
  return v;
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::vector<double> NumberList(const Json& v, const std::string& path) {
  std::vector<double> out;
  const Json& arr = Array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(Number(arr[i], Index(path, i)));
  }
  return out;
}

std::vector<int> IntList(const Json& v, const std::string& path) {
  std::vector<int> out;
  const Json& arr = Array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(static_cast<int>(Integer(arr[i], Index(path, i))));
  }
  return out;
}

std::vector<std::vector<int>> IntLists(const Json& v, const std::string& path) {
  std::vector<std::vector<int>> out;
  const Json& arr = Array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(IntList(arr[i], Index(path, i)));
  }
  return out;
}

// Library validation errors are reported against the enclosing field.
template <typename Build>
auto Construct(const std::string& path, Build build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    Fail(path, e.what());
  }
}

SetFunction ParseFunction(const Json& j, int n) {
  const std::string path = "function";
  const std::string kind = String(Field(j, "kind", path), path + ".kind");
  if (kind == "explicit-table") {
    std::vector<double> values =
        NumberList(Field(j, "values", path), path + ".values");
    return Construct(path, [&] {
      return SetFunction::ExplicitTable(n, std::move(values));
    });
  }
  if (kind == "directed-cut") {
    const std::string arcs_path = path + ".arcs";
    const Json& arr = Array(Field(j, "arcs", path), arcs_path);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = Index(arcs_path, i);
      arcs.push_back({static_cast<int>(Integer(Field(arr[i], "from", p), p + ".from")),
                      static_cast<int>(Integer(Field(arr[i], "to", p), p + ".to")),
                      Number(Field(arr[i], "weight", p), p + ".weight")});
    }
    return Construct(path, [&] {
      return SetFunction::DirectedCut(n, std::move(arcs));
    });
  }
  if (kind == "coverage") {
    std::vector<double> weights =
        NumberList(Field(j, "item_weights", path), path + ".item_weights");
    std::vector<std::vector<int>> covers =
        IntLists(Field(j, "covers", path), path + ".covers");
    return Construct(path, [&] {
      return SetFunction::Coverage(n, std::move(weights), std::move(covers));
    });
  }
  Fail(path + ".kind", "unknown function kind '" + kind + "' for schema version " +
                           std::to_string(kInstanceSchemaVersion));
}

Polytope ParseConstraint(const Json& j, int n) {
  const std::string path = "constraint";
  const std::string kind = String(Field(j, "kind", path), path + ".kind");
  if (kind == "cardinality") {
    const double k = Number(Field(j, "k", path), path + ".k");
    return Construct(path, [&] { return Polytope::Cardinality(n, k); });
  }
  if (kind == "partition-matroid") {
    auto blocks = IntLists(Field(j, "blocks", path), path + ".blocks");
    auto budgets = NumberList(Field(j, "budgets", path), path + ".budgets");
    return Construct(path, [&] {
      return Polytope::PartitionMatroid(n, std::move(blocks), std::move(budgets));
    });
  }
  if (kind == "knapsack") {
    auto costs = NumberList(Field(j, "costs", path), path + ".costs");
    const double budget = Number(Field(j, "budget", path), path + ".budget");
    return Construct(path, [&] {
      return Polytope::Knapsack(n, std::move(costs), budget);
    });
  }
  Fail(path + ".kind", "unknown constraint kind '" + kind +
                           "' for schema version " +
                           std::to_string(kInstanceSchemaVersion));
}

Json FunctionJson(const SetFunction& f) {
  Json j;
  j["kind"] = FunctionKindName(f.kind());
  switch (f.kind()) {
    case FunctionKind::kExplicitTable:
      j["values"] = f.table();
      break;
    case FunctionKind::kDirectedCut: {
      Json arcs = Json::array();
      for (const Arc& a : f.arcs()) {
        Json arc;
        arc["from"] = a.from;
        arc["to"] = a.to;
        arc["weight"] = a.weight;
        arcs.push_back(std::move(arc));
      }
      j["arcs"] = std::move(arcs);
      break;
    }
    case FunctionKind::kCoverage:
      j["item_weights"] = f.item_weights();
      j["covers"] = f.covers();
      break;
  }
  return j;
}

Json ConstraintJson(const Polytope& c) {
  Json j;
  j["kind"] = PolytopeKindName(c.kind());
  switch (c.kind()) {
    case PolytopeKind::kCardinality:
      j["k"] = c.cardinality();
      break;
    case PolytopeKind::kPartitionMatroid:
      j["blocks"] = c.blocks();
      j["budgets"] = c.block_budgets();
      break;
    case PolytopeKind::kKnapsack:
      j["costs"] = c.costs();
      j["budget"] = c.knapsack_budget();
      break;
  }
  return j;
}

}  // namespace

InstanceFile ParseInstance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const std::string root = "instance";
  const std::int64_t version =
      Integer(Field(doc, "schema_version", root), "schema_version");
  if (version != kInstanceSchemaVersion) {
    Fail("schema_version", "unsupported version " + std::to_string(version) +
                               " (expected " +
                               std::to_string(kInstanceSchemaVersion) + ")");
  }
  const std::string name = String(Field(doc, "name", root), "name");
  const std::int64_t n = Integer(Field(doc, "n", root), "n");
  if (n < 1 || n > 64) Fail("n", "ground set size must lie in [1, 64]");
  SetFunction function = ParseFunction(Field(doc, "function", root), static_cast<int>(n));
  Polytope constraint = ParseConstraint(Field(doc, "constraint", root), static_cast<int>(n));
  InstanceFile instance{static_cast<int>(version), name, std::move(function),
                        std::move(constraint), std::nullopt};
  if (const auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) Fail("metadata", "expected an object");
    InstanceMetadata meta;
    if (const auto g = it->find("generator"); g != it->end()) {
      meta.generator = String(*g, "metadata.generator");
    }
    if (const auto s = it->find("seed"); s != it->end()) {
      if (!s->is_number_unsigned()) Fail("metadata.seed", "expected an unsigned integer");
      meta.seed = s->get<std::uint64_t>();
    }
    if (const auto m = it->find("monotone"); m != it->end()) {
      if (!m->is_boolean()) Fail("metadata.monotone", "expected a boolean");
      meta.monotone = m->get<bool>();
    }
    instance.metadata = std::move(meta);
  }
  return instance;
}

std::string SerializeInstance(const InstanceFile& instance) {
  Json doc;
  doc["schema_version"] = instance.schema_version;
  doc["name"] = instance.name;
  doc["n"] = instance.function.n();
  doc["function"] = FunctionJson(instance.function);
  doc["constraint"] = ConstraintJson(instance.constraint);
  if (instance.metadata) {
    Json meta = Json::object();
    if (!instance.metadata->generator.empty()) {
      meta["generator"] = instance.metadata->generator;
    }
    if (instance.metadata->seed) meta["seed"] = *instance.metadata->seed;
    if (instance.metadata->monotone) meta["monotone"] = *instance.metadata->monotone;
    doc["metadata"] = std::move(meta);
  }
  return doc.dump(2) + "\n";
}

InstanceFile ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseInstance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open for writing");
  out << text;
  if (!out) throw Error(path + ": write failed");
}

std::string DescribeConstraint(const Polytope& c) {
  std::ostringstream s;
  s << PolytopeKindName(c.kind());
  switch (c.kind()) {
    case PolytopeKind::kCardinality:
      s << "(k=" << c.cardinality() << ")";
      break;
    case PolytopeKind::kPartitionMatroid:
      s << "(blocks=" << c.blocks().size() << ")";
      break;
    case PolytopeKind::kKnapsack:
      s << "(budget=" << c.knapsack_budget() << ")";
      break;
  }
  return s.str();
}

}  // namespace submodmax
