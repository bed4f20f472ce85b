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

#include "submodmax/multilinear.h"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "submodmax/errors.h"
#include "submodmax/generators.h"

namespace submodmax {
namespace {

const EstimatorConfig kExact{EstimatorMode::kExact, 0, 0};
const EstimatorConfig kClosed{EstimatorMode::kClosedForm, 0, 0};

SetFunction SingleArc() { return SetFunction::DirectedCut(2, {{0, 1, 1.0}}); }
SetFunction TwoItemCoverage() {
  return SetFunction::Coverage(2, {1.0, 1.0}, {{0}, {0, 1}});
}

TEST(MultilinearTest, CutExample) {
  const Point x({0.5, 0.5});
  EXPECT_DOUBLE_EQ(Multilinear(SingleArc(), x, kExact), 0.25);
  EXPECT_DOUBLE_EQ(Multilinear(SingleArc(), x, kClosed), 0.25);
}

TEST(MultilinearTest, CoverageExample) {
  EXPECT_DOUBLE_EQ(Multilinear(TwoItemCoverage(), Point({1, 0}), kExact), 1.0);
  EXPECT_DOUBLE_EQ(Multilinear(TwoItemCoverage(), Point({1, 0}), kClosed), 1.0);
}

TEST(MultilinearTest, AgreesWithFunctionOnVertices) {
  const SetFunction f =
      SetFunction::ExplicitTable(4, testing::RandomSubmodularValues(4, 11));
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    std::vector<double> x(4);
    for (int i = 0; i < 4; ++i) x[i] = mask >> i & 1;
    EXPECT_DOUBLE_EQ(Multilinear(f, Point(x), kExact), f.ValueOfMask(mask));
  }
}

TEST(MultilinearTest, MatchesNaiveSumAtRandomPoints) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SetFunction table =
      SetFunction::ExplicitTable(6, testing::RandomSubmodularValues(6, 2));
  const SetFunction cut = RandomDirectedCut(7, 9);
  const SetFunction cover = RandomCoverage(7, 10);
  for (int trial = 0; trial < 30; ++trial) {
    for (const SetFunction* f : {&table, &cut, &cover}) {
      std::vector<double> x(f->n());
      for (double& c : x) c = u(rng);
      // Snap some coordinates to the boundary to exercise the split.
      x[0] = trial % 3 == 0 ? 0.0 : x[0];
      x[1] = trial % 3 == 1 ? 1.0 : x[1];
      const double want = testing::NaiveMultilinear(*f, x);
      EXPECT_NEAR(Multilinear(*f, Point(x), kExact), want, 1e-12);
      if (f->is_structural()) {
        EXPECT_NEAR(Multilinear(*f, Point(x), kClosed), want, 1e-12);
      }
    }
  }
}

TEST(MultilinearTest, CutGradientExamples) {
  const Point x({0.5, 0.5});
  const std::vector<double> g = Gradient(SingleArc(), x, kExact);
  EXPECT_DOUBLE_EQ(g[0], 0.5);
  EXPECT_DOUBLE_EQ(g[1], -0.5);
  const std::vector<double> r = ResidualGradient(SingleArc(), x, kExact);
  EXPECT_DOUBLE_EQ(r[0], 0.25);
  EXPECT_DOUBLE_EQ(r[1], -0.25);
}

TEST(MultilinearTest, GradientAtOriginIsSingletonGain) {
  const SetFunction f =
      SetFunction::ExplicitTable(3, testing::RandomSubmodularValues(3, 4));
  const std::vector<double> g = Gradient(f, Point::Zeros(3), kExact);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(g[i], f.ValueOfMask(1u << i) - f.ValueOfMask(0), 1e-15);
  }
  EXPECT_EQ(ResidualGradient(f, Point::Zeros(3), kExact), g);
  for (double r : ResidualGradient(f, Point::Ones(3), kExact)) {
    EXPECT_EQ(r, 0.0);
  }
}

TEST(MultilinearTest, GradientMatchesForwardDifferenceForAnyStep) {
  const SetFunction f =
      SetFunction::ExplicitTable(3, testing::RandomSubmodularValues(3, 8));
  const std::vector<double> x = {0.2, 0.6, 0.35};
  const std::vector<double> g = Gradient(f, Point(x), kExact);
  for (double step : {0.5, 0.1, 1e-3}) {
    for (int i = 0; i < 3; ++i) {
      std::vector<double> y = x;
      y[i] += step;
      const double quotient = (testing::NaiveMultilinear(f, y) -
                               testing::NaiveMultilinear(f, x)) /
                              step;
      EXPECT_NEAR(g[i], quotient, 1e-9);
    }
  }
}

TEST(MultilinearTest, MaxSingleton) {
  EXPECT_DOUBLE_EQ(MaxSingleton(SingleArc()), 1.0);
  EXPECT_DOUBLE_EQ(MaxSingleton(TwoItemCoverage()), 2.0);
  EXPECT_DOUBLE_EQ(
      MaxSingleton(SetFunction::ExplicitTable(2, {0, 0, 0, 0})), 0.0);
}

TEST(MultilinearTest, MonteCarloIsSeededAndUnbiased) {
  const SetFunction f = RandomCoverage(6, 21);
  const Point x({0.1, 0.4, 0.5, 0.9, 0.3, 0.7});
  const EstimatorConfig mc{EstimatorMode::kMonteCarlo, 20000, 17};
  const Estimate a = EstimateMultilinear(f, x, mc);
  const Estimate b = EstimateMultilinear(f, x, mc);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_GT(a.std_error, 0.0);
  EXPECT_LT(std::abs(a.mean - Multilinear(f, x, kClosed)), 5 * a.std_error);
  const Estimate exact = EstimateMultilinear(f, x, kClosed);
  EXPECT_EQ(exact.std_error, 0.0);
}

TEST(MultilinearTest, MonteCarloGradientIsClose) {
  const SetFunction f = RandomDirectedCut(5, 4);
  const Point x({0.2, 0.4, 0.6, 0.8, 0.5});
  const std::vector<double> exact = Gradient(f, x, kClosed);
  const std::vector<double> mc =
      Gradient(f, x, {EstimatorMode::kMonteCarlo, 200000, 3});
  for (std::size_t i = 0; i < exact.size(); ++i) {
    EXPECT_NEAR(mc[i], exact[i], 0.05);
  }
}

TEST(MultilinearTest, ConfigErrors) {
  const SetFunction table = SetFunction::ExplicitTable(1, {0, 1});
  EXPECT_THROW(ValidateConfig(table, kClosed), ConfigError);
  EXPECT_THROW(ValidateConfig(table, {EstimatorMode::kMonteCarlo, 0, 0}),
               ConfigError);
  EXPECT_THROW(Multilinear(table, Point({0.5, 0.5}), kExact),
               InvalidArgumentError);
  EXPECT_THROW(ParseEstimatorMode("fast"), ConfigError);
  EXPECT_EQ(ParseEstimatorMode("mc"), EstimatorMode::kMonteCarlo);
  EXPECT_EQ(ExactConfigFor(table).mode, EstimatorMode::kExact);
  EXPECT_EQ(ExactConfigFor(SingleArc()).mode, EstimatorMode::kClosedForm);
}

TEST(MultilinearTest, DeriveSeedSeparatesLabels) {
  EXPECT_NE(DeriveSeed(1, 1), DeriveSeed(1, 2));
  EXPECT_NE(DeriveSeed(1, 1), DeriveSeed(2, 1));
  EXPECT_EQ(DeriveSeed(9, 4), DeriveSeed(9, 4));
}

}  // namespace
}  // namespace submodmax
