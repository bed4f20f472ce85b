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

#include "submodmax/verify.h"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "submodmax/errors.h"
#include "submodmax/generators.h"

namespace submodmax {
namespace {

SetFunction SingleArc() { return SetFunction::DirectedCut(2, {{0, 1, 1.0}}); }

TEST(BruteForceOptTest, SmallExamples) {
  const IntegralOptimum opt =
      BruteForceOpt(SingleArc(), Polytope::Cardinality(2, 1));
  EXPECT_EQ(opt.set, (Subset{0}));
  EXPECT_DOUBLE_EQ(opt.value, 1.0);
  const IntegralOptimum zero = BruteForceOpt(
      SetFunction::ExplicitTable(2, {0, 0, 0, 0}), Polytope::Cardinality(2, 2));
  EXPECT_TRUE(zero.set.empty());
  EXPECT_EQ(zero.value, 0.0);
}

TEST(BruteForceOptTest, MatchesNestedLoopsOnPartitionMatroid) {
  // Blocks {0,1,2}, {3,4,5}, {6,7} with budgets 1, 2, 1: choose at most
  // one, two and one element from each.
  const Polytope c = Polytope::PartitionMatroid(
      8, {{0, 1, 2}, {3, 4, 5}, {6, 7}}, {1, 2, 1});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SetFunction f = SetFunction::ExplicitTable(
        8, testing::RandomSubmodularValues(8, 500 + seed));
    double best = 0.0;
    // -1 stands for "nothing from this block".
    for (int a = -1; a < 3; ++a) {
      for (int b1 = 2; b1 < 6; ++b1) {
        for (int b2 = b1; b2 < 6; ++b2) {
          for (int d = -1; d < 2; ++d) {
            std::uint64_t mask = 0;
            if (a >= 0) mask |= 1u << a;
            if (b1 >= 3) mask |= 1u << b1;  // 2 encodes "none"
            if (b2 > b1) mask |= 1u << b2;
            if (d >= 0) mask |= 1u << (6 + d);
            best = std::max(best, f.ValueOfMask(mask));
          }
        }
      }
    }
    EXPECT_DOUBLE_EQ(BruteForceOpt(f, c).value, best) << "seed " << seed;
  }
}

TEST(BruteForceOptTest, DominatesEveryFeasibleSet) {
  const SetFunction f = RandomDirectedCut(7, 4);
  const Polytope c = Polytope::Knapsack(7, {1, 2, 1, 3, 1, 2, 1}, 4);
  const IntegralOptimum opt = BruteForceOpt(f, c);
  EXPECT_TRUE(ContainsSet(c, opt.set));
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    Subset s;
    for (int i = 0; i < 7; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    if (ContainsSet(c, s)) EXPECT_GE(opt.value, f.ValueOfMask(mask));
  }
}

TEST(BruteForceOptTest, RejectsLargeN) {
  EXPECT_THROW(BruteForceOpt(RandomDirectedCut(21, 1),
                             Polytope::Cardinality(21, 2)),
               ConfigError);
}

TEST(BruteForceBoxOptTest, Examples) {
  const Point u({0.3, 0.6});
  EXPECT_DOUBLE_EQ(BruteForceBoxOpt(SingleArc(), u, u).value, 0.3 * 0.4);
  const BoxOptimum full =
      BruteForceBoxOpt(SingleArc(), Point::Zeros(2), Point::Ones(2));
  EXPECT_EQ(full.x, Point({1, 0}));
  EXPECT_DOUBLE_EQ(full.value, 1.0);
  const BoxOptimum half =
      BruteForceBoxOpt(SingleArc(), Point::Zeros(2), Point({0.5, 0.5}));
  EXPECT_EQ(half.x, Point({0.5, 0}));
  EXPECT_DOUBLE_EQ(half.value, 0.5);
}

TEST(ComputeBoundTest, KnownValues) {
  EXPECT_NEAR(ComputeBound(0.5, 0.18), 0.37210, 1e-5);
  EXPECT_GT(ComputeBound(0.5, 0.18), kTargetRatio);
  EXPECT_NEAR(ComputeBound(0.5, 0.0), 1 / M_E, 1e-9);
  for (double alpha = 0.5; alpha <= 1.0; alpha += 0.05) {
    EXPECT_NEAR(ComputeBound(alpha, 0.0), 1 / M_E, 1e-9) << alpha;
  }
}

TEST(ComputeBoundTest, GridMaximum) {
  // Independent maximization of the same expression (bounded scalar
  // search) puts the optimum at theta ~ 0.18406.
  std::vector<double> grid(1000);
  for (int i = 0; i < 1000; ++i) grid[i] = i / 999.0;
  const auto [theta, value] = BestBound(0.5, grid);
  EXPECT_NEAR(theta, 0.18406, 0.002);
  EXPECT_NEAR(theta, 0.18, 0.005);
  EXPECT_NEAR(value, 0.3720977, 1e-6);
}

TEST(ComputeBoundTest, Continuity) {
  for (double t = 0.0; t < 1.0; t += 0.01) {
    EXPECT_LT(std::abs(ComputeBound(0.5, t + 1e-7) - ComputeBound(0.5, t)),
              1e-5);
  }
}

TEST(ComputeBoundTest, RejectsOutOfRange) {
  EXPECT_THROW(ComputeBound(0.4, 0.1), InvalidArgumentError);
  EXPECT_THROW(ComputeBound(0.5, 1.1), InvalidArgumentError);
}

TEST(CheckXOrOptTest, EdgeCases) {
  const SetFunction f = RandomDirectedCut(5, 6);
  const Subset s = {0, 3};
  EXPECT_TRUE(CheckXOrOpt(f, Point::Zeros(5), s));
  EXPECT_TRUE(CheckXOrOpt(f, Point({1, 0.2, 0, 0, 0.4}), s));
}

TEST(CheckXOrOptTest, RandomSweep) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 9;
    const SetFunction f = trial % 2 ? RandomDirectedCut(n, trial)
                                    : RandomCoverage(n, trial);
    std::vector<double> x(n);
    Subset s;
    for (int i = 0; i < n; ++i) {
      x[i] = unit(rng);
      if (unit(rng) < 0.5) s.push_back(i);
    }
    EXPECT_TRUE(CheckXOrOpt(f, Point(x), s)) << "trial " << trial;
  }
}

TEST(OptDiagnosticsTest, AddsBoundRecords) {
  const SetFunction f = RandomDirectedCut(6, 2);
  const Polytope c = Polytope::Cardinality(6, 2);
  RunConfig run;
  run.delta = 0.01;
  run.theta_grid = ParseThetaGrid("0:0.1:1,+0.18");
  run.cfg = ExactConfigFor(f);
  SolveReport report = Solve(f, c, run);
  AddOptDiagnostics(report, f, run, BruteForceOpt(f, c).value);
  for (const char* name : {"y1_bound", "y1_bound_tight", "z_bound",
                           "z_bound_tight", "ratio_vs_bound"}) {
    EXPECT_NE(report.Find(name), nullptr) << name;
  }
  EXPECT_TRUE(report.Find("y1_bound")->hard);
  EXPECT_FALSE(report.Find("y1_bound_tight")->hard);
  EXPECT_TRUE(report.HardDiagnosticsPass());

  run.alpha = 1.0;
  SolveReport plain = Solve(f, c, run);
  AddOptDiagnostics(plain, f, run, BruteForceOpt(f, c).value);
  EXPECT_EQ(plain.Find("z_bound"), nullptr);
}

}  // namespace
}  // namespace submodmax
