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

#include "submodmax/point.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "submodmax/errors.h"

namespace submodmax {
namespace {

double CheckedCoordinate(double value, std::size_t i) {
  if (!std::isfinite(value) || value < -kCubeTolerance ||
      value > 1.0 + kCubeTolerance) {
    std::ostringstream msg;
    msg << "point coordinate " << i << " = " << value << " is outside [0,1]";
    throw InvalidArgumentError(msg.str());
  }
  return std::clamp(value, 0.0, 1.0);
}

void CheckSameSize(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InvalidArgumentError("dimension mismatch: " + std::to_string(a) +
                               " vs " + std::to_string(b));
  }
}

template <typename Op>
Point Combine(const Point& x, const Point& y, Op op) {
  CheckSameSize(x.size(), y.size());
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = op(x[i], y[i]);
  return Point(std::move(out));
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = CheckedCoordinate(coords_[i], i);
  }
}

Point Point::Ones(std::size_t n) {
  Point p(n);
  std::fill(p.coords_.begin(), p.coords_.end(), 1.0);
  return p;
}

Point Point::Indicator(std::size_t n, std::span<const int> subset) {
  Point p(n);
  for (int i : subset) {
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
      throw InvalidSubsetError("subset element " + std::to_string(i) +
                               " outside ground set of size " +
                               std::to_string(n));
    }
    p.coords_[i] = 1.0;
  }
  return p;
}

Point Point::With(std::size_t i, double value) const {
  Point p = *this;
  p.coords_.at(i) = CheckedCoordinate(value, i);
  return p;
}

double Point::NormInf() const {
  double m = 0.0;
  for (double c : coords_) m = std::max(m, c);
  return m;
}

double Point::Norm1() const {
  double s = 0.0;
  for (double c : coords_) s += c;
  return s;
}

Point Hadamard(const Point& x, const Point& y) {
  return Combine(x, y, [](double a, double b) { return a * b; });
}

Point Join(const Point& x, const Point& y) {
  return Combine(x, y, [](double a, double b) { return std::max(a, b); });
}

Point Meet(const Point& x, const Point& y) {
  return Combine(x, y, [](double a, double b) { return std::min(a, b); });
}

Point Complement(const Point& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = 1.0 - x[i];
  return Point(std::move(out));
}

bool LessEq(const Point& x, const Point& y, double slack) {
  CheckSameSize(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i] + slack) return false;
  }
  return true;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  CheckSameSize(a.size(), b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> Hadamard(std::span<const double> a,
                             std::span<const double> b) {
  CheckSameSize(a.size(), b.size());
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace submodmax
