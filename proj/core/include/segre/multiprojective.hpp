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

// Multiprojective spaces Y = P^{n_1} x ... x P^{n_k}, their points, and
// finite point sets.

#ifndef SEGRE_MULTIPROJECTIVE_HPP_
#define SEGRE_MULTIPROJECTIVE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "segre/projective.hpp"

namespace segre {

class Shape {
 public:
  // Throws ShapeError unless dims is nonempty and every entry is >= 1.
  explicit Shape(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int n(std::size_t i) const { return dims_[i]; }
  std::size_t k() const { return dims_.size(); }
  // Coordinates of the Segre ambient space: prod (n_i + 1).
  std::size_t ambient_size() const { return ambient_size_; }
  // Projective dimension of the Segre ambient space.
  std::size_t r() const { return ambient_size_ - 1; }
  int m() const;
  int dim_sum() const;
  bool all_ones() const;

  // "2,1,1"
  std::string to_string() const;
  // Parses "2,1,1".
  static Shape parse(const std::string& text);

  bool operator==(const Shape&) const = default;

 private:
  std::vector<int> dims_;
  std::size_t ambient_size_;
};

class MPoint {
 public:
  explicit MPoint(std::vector<ProjPoint> factors);

  const std::vector<ProjPoint>& factors() const { return factors_; }
  const ProjPoint& factor(std::size_t i) const { return factors_[i]; }
  std::size_t k() const { return factors_.size(); }
  FieldSpec field() const { return factors_.front().field(); }
  bool fits(const Shape& shape) const;

  // True when the points agree on every factor except possibly i.
  bool same_fiber(const MPoint& o, std::size_t i) const;

  bool operator==(const MPoint&) const = default;
  std::strong_ordering operator<=>(const MPoint& o) const;

  std::string to_string() const;

 private:
  std::vector<ProjPoint> factors_;
};

// A finite set of distinct points of one multiprojective space, kept in
// ascending canonical order. The empty set is a valid value.
class PointSet {
 public:
  // Throws ShapeError on dimension mismatch, FieldMismatch on mixed fields
  // and DuplicatePointError on repeated points.
  PointSet(Shape shape, FieldSpec field, std::vector<MPoint> points);

  const Shape& shape() const { return shape_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<MPoint>& points() const { return points_; }
  const MPoint& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const MPoint& p) const;
  PointSet without(std::size_t index) const;
  PointSet without(const MPoint& p) const;
  // Points whose index bit is set in mask.
  PointSet subset(std::uint64_t mask) const;
  PointSet subset(std::span<const std::size_t> indices) const;
  PointSet unite(const PointSet& o) const;
  PointSet minus(const PointSet& o) const;

  bool operator==(const PointSet& o) const;
  std::string to_string() const;

 private:
  Shape shape_;
  FieldSpec field_;
  std::vector<MPoint> points_;
};

// A multidegree with entries in {0, 1}, not all zero.
class Pattern {
 public:
  explicit Pattern(std::vector<bool> mask);
  static Pattern eps(std::size_t k, std::size_t i);      // single 1
  static Pattern eps_hat(std::size_t k, std::size_t i);  // single 0, k >= 2
  static Pattern all_ones(std::size_t k);

  const std::vector<bool>& mask() const { return mask_; }
  std::size_t k() const { return mask_.size(); }
  bool operator[](std::size_t i) const { return mask_[i]; }

 private:
  std::vector<bool> mask_;
};

// All points of P^n over GF(p) in ascending canonical order.
std::vector<ProjPoint> projective_points(const FieldSpec& field, int n);
// All points of Y over GF(p) in ascending canonical order (factor 1 most
// significant). Throws UnsupportedError over the rationals.
std::vector<MPoint> rational_points(const Shape& shape, const FieldSpec& field);
// |P^n(F_p)| and |Y(F_p)|.
std::uint64_t count_projective_points(std::uint32_t p, int n);
std::uint64_t count_rational_points(const Shape& shape, std::uint32_t p);

}  // namespace segre

#endif  // SEGRE_MULTIPROJECTIVE_HPP_
