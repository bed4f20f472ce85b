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

#include "submodmax/property_suite.h"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "submodmax/generators.h"

namespace submodmax {
namespace {

void ExpectAllPass(const std::vector<PropertyCheck>& checks) {
  for (const PropertyCheck& c : checks) {
    EXPECT_TRUE(c.passed()) << c.name << " failures=" << c.failures
                            << " worst=" << c.worst_margin;
  }
}

TEST(PropertySuiteTest, CutInstancePasses) {
  const SetFunction f = RandomDirectedCut(7, 5);
  const Polytope c = Polytope::Cardinality(7, 3);
  SuiteOptions options;
  options.trials = 100;
  options.box_trials = 30;
  options.oracle_trials = 50;
  const std::vector<PropertyCheck> checks = RunPropertySuite(f, c, options);
  EXPECT_GE(checks.size(), 10u);
  ExpectAllPass(checks);
}

TEST(PropertySuiteTest, TableInstancePasses) {
  const SetFunction f =
      SetFunction::ExplicitTable(6, testing::RandomSubmodularValues(6, 9));
  ConstraintSpec spec;
  spec.kind = PolytopeKind::kKnapsack;
  const Polytope c = RandomConstraint(6, spec, 3);
  SuiteOptions options;
  options.trials = 100;
  options.box_trials = 30;
  options.oracle_trials = 50;
  ExpectAllPass(RunPropertySuite(f, c, options));
}

TEST(PropertySuiteTest, IndividualChecksCountTrials) {
  const SetFunction f = RandomCoverage(5, 1);
  const PropertyCheck smooth = CheckSmoothness(f, 40, 2);
  EXPECT_EQ(smooth.name, "smoothness");
  EXPECT_EQ(smooth.trials, 40);
  EXPECT_TRUE(smooth.passed());
  const PropertyCheck mc = CheckMonteCarlo(f, 20, 2000, 3);
  EXPECT_EQ(mc.allowed_failures, 1);
  EXPECT_TRUE(mc.passed());
  EXPECT_TRUE(CheckVertexAgreement(f).passed());
}

TEST(PropertySuiteTest, OneRecordPerProperty) {
  const SetFunction f = RandomDirectedCut(5, 2);
  const std::vector<PropertyCheck> dg = CheckDoubleGreedy(f, 10, 1);
  ASSERT_EQ(dg.size(), 4u);
  EXPECT_EQ(dg[0].name, "dg_guarantee");
  const std::vector<PropertyCheck> oracle =
      CheckPolytopeOracle(Polytope::Cardinality(5, 2), 10, 1);
  ASSERT_EQ(oracle.size(), 4u);
  ExpectAllPass(dg);
  ExpectAllPass(oracle);
}

}  // namespace
}  // namespace submodmax
