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

#include <algorithm>
#include <cmath>
#include <random>

#include "submodmax/errors.h"

namespace submodmax {
namespace {

// Probabilities and element masks of every assignment to a slice of the
// fractional coordinates, built by doubling.
struct SliceTable {
  std::vector<double> prob;
  std::vector<std::uint64_t> mask;
};

SliceTable BuildSlice(const Point& x, std::span<const int> coords) {
  const std::size_t size = std::size_t{1} << coords.size();
  SliceTable s{std::vector<double>(size), std::vector<std::uint64_t>(size)};
  s.prob[0] = 1.0;
  s.mask[0] = 0;
  for (std::size_t b = 0; b < coords.size(); ++b) {
    const int i = coords[b];
    const std::size_t half = std::size_t{1} << b;
    for (std::size_t t = 0; t < half; ++t) {
      s.prob[t | half] = s.prob[t] * x[i];
      s.mask[t | half] = s.mask[t] | (std::uint64_t{1} << i);
      s.prob[t] *= 1.0 - x[i];
    }
  }
  return s;
}

double EnumerateExact(const SetFunction& f, const Point& x) {
  std::uint64_t base = 0;
  std::vector<int> fractional;
  for (int i = 0; i < f.n(); ++i) {
    if (x[i] >= 1.0) {
      base |= std::uint64_t{1} << i;
    } else if (x[i] > 0.0) {
      fractional.push_back(i);
    }
  }
  const std::size_t low_count = std::min<std::size_t>(fractional.size(), 12);
  const std::span<const int> all(fractional);
  const SliceTable low = BuildSlice(x, all.first(low_count));
  const SliceTable high = BuildSlice(x, all.subspan(low_count));
  double total = 0.0;
  for (std::size_t h = 0; h < high.prob.size(); ++h) {
    if (high.prob[h] == 0.0) continue;
    const std::uint64_t hmask = base | high.mask[h];
    double partial = 0.0;
    for (std::size_t l = 0; l < low.prob.size(); ++l) {
      partial += low.prob[l] * f.ValueOfMask(hmask | low.mask[l]);
    }
    total += high.prob[h] * partial;
  }
  return total;
}

void DrawMembers(const Point& x, std::mt19937_64& rng,
                 std::uniform_real_distribution<double>& uniform,
                 std::vector<std::uint8_t>& members) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    members[i] = uniform(rng) < x[i] ? 1 : 0;
  }
}

Estimate SampleMultilinear(const SetFunction& f, const Point& x,
                           const EstimatorConfig& cfg) {
  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<std::uint8_t> members(f.n());
  // Welford running mean / variance.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t s = 1; s <= cfg.sample_count; ++s) {
    DrawMembers(x, rng, uniform, members);
    const double value = f.Value(members);
    const double delta = value - mean;
    mean += delta / static_cast<double>(s);
    m2 += delta * (value - mean);
  }
  const double count = static_cast<double>(cfg.sample_count);
  const double variance = cfg.sample_count > 1 ? m2 / (count - 1.0) : 0.0;
  return {mean, std::sqrt(variance / count)};
}

void CheckPoint(const SetFunction& f, const Point& x) {
  if (x.size() != static_cast<std::size_t>(f.n())) {
    throw InvalidArgumentError("point has " + std::to_string(x.size()) +
                               " coordinates, ground set has " +
                               std::to_string(f.n()));
  }
}

}  // namespace

const char* EstimatorModeName(EstimatorMode mode) {
  switch (mode) {
    case EstimatorMode::kExact:
      return "exact";
    case EstimatorMode::kClosedForm:
      return "closed";
    case EstimatorMode::kMonteCarlo:
      return "mc";
  }
  return "unknown";
}

EstimatorMode ParseEstimatorMode(const std::string& name) {
  if (name == "exact") return EstimatorMode::kExact;
  if (name == "closed") return EstimatorMode::kClosedForm;
  if (name == "mc") return EstimatorMode::kMonteCarlo;
  throw ConfigError("unknown estimator mode '" + name +
                    "' (expected exact, closed or mc)");
}

void ValidateConfig(const SetFunction& f, const EstimatorConfig& cfg) {
  switch (cfg.mode) {
    case EstimatorMode::kExact:
      if (f.n() > kMaxEnumerationElements) {
        throw ConfigError("exact enumeration needs n <= " +
                          std::to_string(kMaxEnumerationElements) + ", got " +
                          std::to_string(f.n()));
      }
      return;
    case EstimatorMode::kClosedForm:
      if (!f.is_structural()) {
        throw ConfigError(std::string("closed form unavailable for ") +
                          FunctionKindName(f.kind()));
      }
      return;
    case EstimatorMode::kMonteCarlo:
      if (cfg.sample_count < 1) {
        throw ConfigError("monte-carlo needs a positive sample count");
      }
      return;
  }
}

EstimatorConfig ExactConfigFor(const SetFunction& f) {
  EstimatorConfig cfg;
  cfg.mode = f.is_structural() ? EstimatorMode::kClosedForm
                               : EstimatorMode::kExact;
  return cfg;
}

double EvalSet(const SetFunction& f, std::span<const int> subset) {
  std::vector<std::uint8_t> members(f.n(), 0);
  for (int i : subset) {
    if (!f.ground().Contains(i)) {
      throw InvalidSubsetError("element " + std::to_string(i) +
                               " outside ground set of size " +
                               std::to_string(f.n()));
    }
    if (members[i]) {
      throw InvalidSubsetError("element " + std::to_string(i) + " repeated");
    }
    members[i] = 1;
  }
  return f.Value(members);
}

double Multilinear(const SetFunction& f, const Point& x,
                   const EstimatorConfig& cfg) {
  return EstimateMultilinear(f, x, cfg).mean;
}

Estimate EstimateMultilinear(const SetFunction& f, const Point& x,
                             const EstimatorConfig& cfg) {
  ValidateConfig(f, cfg);
  CheckPoint(f, x);
  switch (cfg.mode) {
    case EstimatorMode::kExact:
      return {EnumerateExact(f, x), 0.0};
    case EstimatorMode::kClosedForm:
      return {f.ClosedForm(x), 0.0};
    case EstimatorMode::kMonteCarlo:
      return SampleMultilinear(f, x, cfg);
  }
  return {};
}

std::vector<double> Gradient(const SetFunction& f, const Point& x,
                             const EstimatorConfig& cfg) {
  ValidateConfig(f, cfg);
  CheckPoint(f, x);
  const int n = f.n();
  std::vector<double> grad(n, 0.0);
  if (cfg.mode != EstimatorMode::kMonteCarlo) {
    for (int i = 0; i < n; ++i) {
      grad[i] = Multilinear(f, x.With(i, 1.0), cfg) -
                Multilinear(f, x.With(i, 0.0), cfg);
    }
    return grad;
  }
  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<std::uint8_t> members(n);
  for (std::int64_t s = 0; s < cfg.sample_count; ++s) {
    DrawMembers(x, rng, uniform, members);
    for (int i = 0; i < n; ++i) {
      const std::uint8_t saved = members[i];
      members[i] = 1;
      const double with = f.Value(members);
      members[i] = 0;
      const double without = f.Value(members);
      members[i] = saved;
      grad[i] += with - without;
    }
  }
  for (double& g : grad) g /= static_cast<double>(cfg.sample_count);
  return grad;
}

std::vector<double> ResidualGradient(const SetFunction& f, const Point& x,
                                     const EstimatorConfig& cfg) {
  std::vector<double> grad = Gradient(f, x, cfg);
  for (std::size_t i = 0; i < grad.size(); ++i) grad[i] *= 1.0 - x[i];
  return grad;
}

double MaxSingleton(const SetFunction& f) {
  double best = 0.0;
  std::vector<std::uint8_t> members(f.n(), 0);
  for (int i = 0; i < f.n(); ++i) {
    members[i] = 1;
    best = std::max(best, f.Value(members));
    members[i] = 0;
  }
  return best;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t label) {
  // SplitMix64 finalizer over the combined word.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (label + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace submodmax
