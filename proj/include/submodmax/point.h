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

// Points of the unit cube [0,1]^n and the coordinatewise vector algebra the
// algorithms are written in: Hadamard product, join, meet, complement and
// the two norms.

#ifndef SUBMODMAX_POINT_H_
#define SUBMODMAX_POINT_H_

#include <cstddef>
#include <span>
#include <vector>

namespace submodmax {

// Element subsets are sorted lists of distinct indices into the ground set.
using Subset = std::vector<int>;

// Coordinates outside [0,1] by at most this much are snapped to the cube.
inline constexpr double kCubeTolerance = 1e-12;

class Point {
 public:
  Point() = default;
  // All-zero point of dimension n.
  explicit Point(std::size_t n) : coords_(n, 0.0) {}
  // Throws InvalidArgumentError when a coordinate is non-finite or lies
  // outside [0,1] by more than kCubeTolerance.
  explicit Point(std::vector<double> coords);

  static Point Zeros(std::size_t n) { return Point(n); }
  static Point Ones(std::size_t n);
  // 1_S. Throws InvalidSubsetError for indices outside [0, n).
  static Point Indicator(std::size_t n, std::span<const int> subset);

  std::size_t size() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  // Copy with coordinate i replaced; the value is validated like the
  // constructor's.
  Point With(std::size_t i, double value) const;

  double NormInf() const;
  double Norm1() const;

  bool operator==(const Point& other) const = default;

 private:
  std::vector<double> coords_;
};

Point Hadamard(const Point& x, const Point& y);
Point Join(const Point& x, const Point& y);
Point Meet(const Point& x, const Point& y);
// 1 - x.
Point Complement(const Point& x);
// x <= y coordinatewise, allowing `slack`.
bool LessEq(const Point& x, const Point& y, double slack = 0.0);

// Real n-vectors (gradients, linear objectives) are plain vectors.
double Dot(std::span<const double> a, std::span<const double> b);
std::vector<double> Hadamard(std::span<const double> a,
                             std::span<const double> b);

}  // namespace submodmax

#endif  // SUBMODMAX_POINT_H_
