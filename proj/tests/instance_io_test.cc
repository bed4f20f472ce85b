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

#include <string>

#include "gtest/gtest.h"
#include "submodmax/errors.h"
#include "submodmax/generators.h"

namespace submodmax {
namespace {

std::string ErrorOf(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char kCutDoc[] = R"({
  "schema_version": 1,
  "name": "tiny",
  "n": 2,
  "function": {"kind": "directed-cut",
               "arcs": [{"from": 0, "to": 1, "weight": 1.0}]},
  "constraint": {"kind": "cardinality", "k": 1}
})";

TEST(InstanceIoTest, ParsesMinimalDocument) {
  const InstanceFile inst = ParseInstance(kCutDoc);
  EXPECT_EQ(inst.name, "tiny");
  EXPECT_EQ(inst.function.n(), 2);
  EXPECT_EQ(inst.function.kind(), FunctionKind::kDirectedCut);
  EXPECT_DOUBLE_EQ(inst.constraint.cardinality(), 1.0);
  EXPECT_FALSE(inst.metadata.has_value());
}

TEST(InstanceIoTest, RoundTripIsByteIdentical) {
  const FunctionKind kinds[] = {FunctionKind::kDirectedCut,
                                FunctionKind::kCoverage,
                                FunctionKind::kExplicitTable};
  const PolytopeKind constraints[] = {PolytopeKind::kCardinality,
                                      PolytopeKind::kPartitionMatroid,
                                      PolytopeKind::kKnapsack};
  for (FunctionKind kind : kinds) {
    for (PolytopeKind ckind : constraints) {
      ConstraintSpec spec;
      spec.kind = ckind;
      const std::string text = SerializeInstance(Generate(kind, 5, spec, 13));
      const std::string again = SerializeInstance(ParseInstance(text));
      EXPECT_EQ(text, again);
    }
  }
  const std::string minimal = SerializeInstance(ParseInstance(kCutDoc));
  EXPECT_EQ(SerializeInstance(ParseInstance(minimal)), minimal);
}

TEST(InstanceIoTest, ReportsLineAndColumnForMalformedJson) {
  const std::string err = ErrorOf("{\n  \"n\": 2,\n  oops\n}");
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
}

TEST(InstanceIoTest, ReportsFieldPaths) {
  std::string doc = kCutDoc;
  doc.replace(doc.find("\"weight\": 1.0"), 13, "\"weight\": \"x\"");
  EXPECT_NE(ErrorOf(doc).find("function.arcs[0].weight"), std::string::npos)
      << ErrorOf(doc);

  doc = kCutDoc;
  doc.replace(doc.find("\"n\": 2"), 6, "\"n\": 1");
  EXPECT_NE(ErrorOf(doc).find("function"), std::string::npos) << ErrorOf(doc);

  doc = kCutDoc;
  doc.replace(doc.find("\"k\": 1"), 6, "\"kk\": 1");
  EXPECT_NE(ErrorOf(doc).find("constraint.k"), std::string::npos);
}

TEST(InstanceIoTest, RejectsUnknownKindsAndVersions) {
  std::string doc = kCutDoc;
  doc.replace(doc.find("directed-cut"), 12, "hypergraph");
  const std::string kind_err = ErrorOf(doc);
  EXPECT_NE(kind_err.find("unknown function kind"), std::string::npos);
  EXPECT_NE(kind_err.find("schema version 1"), std::string::npos);

  doc = kCutDoc;
  doc.replace(doc.find("\"schema_version\": 1"), 19, "\"schema_version\": 2");
  EXPECT_NE(ErrorOf(doc).find("unsupported version 2"), std::string::npos);

  doc = kCutDoc;
  doc.replace(doc.find("cardinality"), 11, "matroid");
  EXPECT_NE(ErrorOf(doc).find("unknown constraint kind"), std::string::npos);
}

TEST(InstanceIoTest, MissingFileIsParseError) {
  EXPECT_THROW(ReadInstanceFile("/nonexistent/instance.json"), ParseError);
}

TEST(InstanceIoTest, DescribeConstraint) {
  EXPECT_EQ(DescribeConstraint(Polytope::Cardinality(3, 2)),
            "cardinality(k=2)");
}

}  // namespace
}  // namespace submodmax
