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

// Deterministic double greedy for max { F(x) : u <= x <= v }.
//
// The lower corner u and upper corner v walk towards each other one
// coordinate at a time. For coordinate i with width w = v_i - u_i,
//
//   a = w * (F(u v 1_i) - F(u ^ 1_{V-i}))     gain of raising u_i
//   b = w * (F(v ^ 1_{V-i}) - F(v v 1_i))     gain of lowering v_i
//
// and both corners meet at u_i + w * a+ / (a+ + b+), or at v_i when
// a+ + b+ = 0. The result x satisfies
//
//   F(x) >= F(OPT_box) / 2 + F(u) / 4 + F(v) / 4.

#ifndef SUBMODMAX_DOUBLE_GREEDY_H_
#define SUBMODMAX_DOUBLE_GREEDY_H_

#include <vector>

#include "submodmax/multilinear.h"
#include "submodmax/point.h"
#include "submodmax/set_function.h"

namespace submodmax {

struct DoubleGreedyStep {
  int coordinate = 0;
  double a = 0.0;
  double b = 0.0;
  // Corners after this step.
  Point u;
  Point v;
};

// Throws InvalidBoxError unless u <= v, and ConfigError for sampled
// estimators: the per-step guarantee needs exact F. When `trace` is given,
// it receives one entry per coordinate.
Point DoubleGreedyBox(const SetFunction& f, const Point& u, const Point& v,
                      const EstimatorConfig& cfg,
                      std::vector<DoubleGreedyStep>* trace = nullptr);

// F(OPT_box) / 2 + F(u) / 4 + F(v) / 4.
double GuaranteeFloor(double f_u, double f_v, double f_opt_box);

}  // namespace submodmax

#endif  // SUBMODMAX_DOUBLE_GREEDY_H_
