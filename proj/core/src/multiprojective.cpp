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

#include "segre/multiprojective.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <utility>

#include "segre/error.hpp"

namespace segre {

Shape::Shape(std::vector<int> dims) : dims_(std::move(dims)), ambient_size_(1) {
  if (dims_.empty()) throw ShapeError("a shape needs at least one factor");
  for (int n : dims_) {
    if (n < 1) {
      throw ShapeError("factor dimensions must be >= 1, got " + std::to_string(n));
    }
    ambient_size_ *= static_cast<std::size_t>(n + 1);
  }
}

int Shape::m() const { return *std::max_element(dims_.begin(), dims_.end()); }

int Shape::dim_sum() const {
  int s = 0;
  for (int n : dims_) s += n;
  return s;
}

bool Shape::all_ones() const {
  return std::all_of(dims_.begin(), dims_.end(), [](int n) { return n == 1; });
}

std::string Shape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims_[i]);
  }
  return out;
}

Shape Shape::parse(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ShapeError("cannot parse shape '" + text + "'");
    }
  }
  return Shape(std::move(dims));
}

MPoint::MPoint(std::vector<ProjPoint> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ShapeError("a point needs at least one factor");
  const FieldSpec f = factors_.front().field();
  for (const ProjPoint& p : factors_) {
    if (p.field() != f) throw FieldMismatch("factors over different fields");
  }
}

bool MPoint::fits(const Shape& shape) const {
  if (shape.k() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].ambient_dim() != static_cast<std::size_t>(shape.n(i))) {
      return false;
    }
  }
  return true;
}

bool MPoint::same_fiber(const MPoint& o, std::size_t i) const {
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j != i && factors_[j] != o.factors_[j]) return false;
  }
  return true;
}

std::strong_ordering MPoint::operator<=>(const MPoint& o) const {
  const std::size_t n = std::min(factors_.size(), o.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = factors_[i] <=> o.factors_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return factors_.size() <=> o.factors_.size();
}

std::string MPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += factors_[i].to_string();
  }
  return out + "]";
}

PointSet::PointSet(Shape shape, FieldSpec field, std::vector<MPoint> points)
    : shape_(std::move(shape)), field_(field), points_(std::move(points)) {
  for (const MPoint& p : points_) {
    if (!p.fits(shape_)) {
      throw ShapeError("point " + p.to_string() + " does not fit shape (" +
                       shape_.to_string() + ")");
    }
    if (p.field() != field_) {
      throw FieldMismatch("point over " + p.field().to_string() +
                          " in a set over " + field_.to_string());
    }
  }
  std::sort(points_.begin(), points_.end());
  const auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) {
    throw DuplicatePointError("duplicate point " + dup->to_string());
  }
}

bool PointSet::contains(const MPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::without(std::size_t index) const {
  std::vector<MPoint> rest;
  rest.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i != index) rest.push_back(points_[i]);
  }
  return PointSet(shape_, field_, std::move(rest));
}

PointSet PointSet::without(const MPoint& p) const {
  std::vector<MPoint> rest;
  for (const MPoint& q : points_) {
    if (q != p) rest.push_back(q);
  }
  return PointSet(shape_, field_, std::move(rest));
}

PointSet PointSet::subset(std::uint64_t mask) const {
  std::vector<MPoint> sel;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (mask >> i & 1) sel.push_back(points_[i]);
  }
  return PointSet(shape_, field_, std::move(sel));
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<MPoint> sel;
  sel.reserve(indices.size());
  for (std::size_t i : indices) sel.push_back(points_.at(i));
  return PointSet(shape_, field_, std::move(sel));
}

PointSet PointSet::unite(const PointSet& o) const {
  if (o.shape_ != shape_ || o.field_ != field_) {
    throw ShapeError("union of sets in different spaces");
  }
  std::vector<MPoint> all;
  std::set_union(points_.begin(), points_.end(), o.points_.begin(),
                 o.points_.end(), std::back_inserter(all));
  return PointSet(shape_, field_, std::move(all));
}

PointSet PointSet::minus(const PointSet& o) const {
  std::vector<MPoint> rest;
  std::set_difference(points_.begin(), points_.end(), o.points_.begin(),
                      o.points_.end(), std::back_inserter(rest));
  return PointSet(shape_, field_, std::move(rest));
}

bool PointSet::operator==(const PointSet& o) const {
  return shape_ == o.shape_ && field_ == o.field_ && points_ == o.points_;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ", ";
    out += points_[i].to_string();
  }
  return out + "}";
}

Pattern::Pattern(std::vector<bool> mask) : mask_(std::move(mask)) {
  if (mask_.empty()) throw ShapeError("empty pattern");
  if (std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; })) {
    throw PreconditionError("pattern must have at least one nonzero entry");
  }
}

Pattern Pattern::eps(std::size_t k, std::size_t i) {
  std::vector<bool> m(k, false);
  m.at(i) = true;
  return Pattern(std::move(m));
}

Pattern Pattern::eps_hat(std::size_t k, std::size_t i) {
  std::vector<bool> m(k, true);
  m.at(i) = false;
  return Pattern(std::move(m));
}

Pattern Pattern::all_ones(std::size_t k) {
  return Pattern(std::vector<bool>(k, true));
}

std::vector<ProjPoint> projective_points(const FieldSpec& field, int n) {
  if (!field.is_prime()) {
    throw UnsupportedError("point enumeration needs a finite field");
  }
  const std::uint32_t p = field.modulus();
  std::vector<ProjPoint> out;
  // Leading 1 at position lead, zeros before it, anything after it.
  std::vector<std::uint32_t> digits;
  for (int lead = 0; lead <= n; ++lead) {
    const int free = n - lead;
    digits.assign(free, 0);
    while (true) {
      Vector v = zero_vector(field, n + 1);
      v[lead] = field.one();
      for (int j = 0; j < free; ++j) {
        v[lead + 1 + j] = Scalar::residue(digits[j], p);
      }
      out.emplace_back(std::move(v));
      int pos = free - 1;
      while (pos >= 0 && ++digits[pos] == p) digits[pos--] = 0;
      if (pos < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MPoint> rational_points(const Shape& shape,
                                    const FieldSpec& field) {
  std::vector<std::vector<ProjPoint>> per_factor;
  for (int n : shape.dims()) per_factor.push_back(projective_points(field, n));
  std::vector<MPoint> out;
  std::vector<std::size_t> idx(shape.k(), 0);
  while (true) {
    std::vector<ProjPoint> f;
    f.reserve(shape.k());
    for (std::size_t i = 0; i < shape.k(); ++i) f.push_back(per_factor[i][idx[i]]);
    out.emplace_back(std::move(f));
    std::size_t pos = shape.k();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < per_factor[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::uint64_t count_projective_points(std::uint32_t p, int n) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (int i = 0; i <= n; ++i) {
    total += power;
    power *= p;
  }
  return total;
}

std::uint64_t count_rational_points(const Shape& shape, std::uint32_t p) {
  std::uint64_t total = 1;
  for (int n : shape.dims()) total *= count_projective_points(p, n);
  return total;
}

}  // namespace segre
