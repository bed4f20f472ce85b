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

#include "submodmax/double_greedy.h"

#include <algorithm>

#include "submodmax/errors.h"

namespace submodmax {

Point DoubleGreedyBox(const SetFunction& f, const Point& u, const Point& v,
                      const EstimatorConfig& cfg,
                      std::vector<DoubleGreedyStep>* trace) {
  if (cfg.mode == EstimatorMode::kMonteCarlo) {
    throw ConfigError("double greedy needs an exact estimator");
  }
  ValidateConfig(f, cfg);
  const int n = f.n();
  if (u.size() != static_cast<std::size_t>(n) ||
      v.size() != static_cast<std::size_t>(n)) {
    throw InvalidBoxError("box corners must have n coordinates");
  }
  if (!LessEq(u, v)) throw InvalidBoxError("box needs u <= v");

  Point lower = u;
  Point upper = v;
  if (trace) trace->clear();
  for (int i = 0; i < n; ++i) {
    const double width = v[i] - u[i];
    double a = 0.0;
    double b = 0.0;
    // A zero-width coordinate is already fixed.
    if (width > 0.0) {
      a = width * (Multilinear(f, lower.With(i, 1.0), cfg) -
                   Multilinear(f, lower.With(i, 0.0), cfg));
      b = width * (Multilinear(f, upper.With(i, 0.0), cfg) -
                   Multilinear(f, upper.With(i, 1.0), cfg));
      const double a_pos = std::max(a, 0.0);
      const double b_pos = std::max(b, 0.0);
      double meet = v[i];
      if (a_pos + b_pos != 0.0) {
        meet = std::clamp(u[i] + width * a_pos / (a_pos + b_pos), u[i], v[i]);
      }
      lower = lower.With(i, meet);
      upper = upper.With(i, meet);
    }
    if (trace) trace->push_back({i, a, b, lower, upper});
  }
  return lower;
}

double GuaranteeFloor(double f_u, double f_v, double f_opt_box) {
  return 0.5 * f_opt_box + 0.25 * f_u + 0.25 * f_v;
}

}  // namespace submodmax
