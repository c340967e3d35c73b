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

// Points of P^n and projective maps of P^1.
//
// P^1 convention: the affine parameter t is (t : 1), infinity is (1 : 0).
// Matrices act on column vectors and are compared up to a nonzero scalar;
// the stored representative has its first nonzero entry (row-major) equal
// to 1.

#ifndef SEGRE_PROJECTIVE_HPP_
#define SEGRE_PROJECTIVE_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>

#include "segre/linalg.hpp"

namespace segre {

class ProjPoint {
 public:
  // Normalizes so the first nonzero coordinate is 1. Throws DegeneracyError
  // on the zero vector and ShapeError on fewer than two coordinates.
  explicit ProjPoint(Vector coords);

  static ProjPoint affine(const Scalar& t);        // (t : 1)
  static ProjPoint infinity(const FieldSpec& f);   // (1 : 0)
  static ProjPoint from_ints(const FieldSpec& f, std::span<const long long> c);

  const Vector& coords() const { return coords_; }
  std::size_t ambient_dim() const { return coords_.size() - 1; }
  FieldSpec field() const { return coords_.front().field(); }

  bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }
  std::strong_ordering operator<=>(const ProjPoint& o) const;

  std::string to_string() const { return segre::to_string(coords_); }

 private:
  Vector coords_;
};

// Scales a matrix so its first nonzero entry is 1.
Matrix normalize_projective(Matrix m);
bool projectively_equal(const Matrix& a, const Matrix& b);
// m * p, as a point. Throws DegeneracyError if the image vector vanishes.
ProjPoint apply(const Matrix& m, const ProjPoint& p);

// The normalized Möbius matrix sending src[j] to dst[j], j = 0, 1, 2.
// Throws DegeneracyError if either triple repeats a point, ShapeError if a
// point is not on P^1.
Matrix fit_pgl2(std::span<const ProjPoint, 3> src,
                std::span<const ProjPoint, 3> dst);

// Fits on the first three pairs and checks the rest. Throws ShapeError on
// length mismatch or fewer than three points.
std::optional<Matrix> projectively_equivalent(std::span<const ProjPoint> a,
                                              std::span<const ProjPoint> b);

}  // namespace segre

#endif  // SEGRE_PROJECTIVE_HPP_
