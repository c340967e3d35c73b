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

#include "segre/projective.hpp"

#include <utility>

#include "segre/error.hpp"

namespace segre {

ProjPoint::ProjPoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw ShapeError("a projective point needs at least two coordinates");
  }
  const FieldSpec f = coords_.front().field();
  for (const Scalar& c : coords_) {
    if (c.field() != f) throw FieldMismatch("mixed fields in a point");
  }
  if (is_zero_vector(coords_)) throw DegeneracyError("zero vector is not a point");
  coords_ = normalize_leading(std::move(coords_));
}

ProjPoint ProjPoint::affine(const Scalar& t) {
  return ProjPoint(Vector{t, t.field().one()});
}

ProjPoint ProjPoint::infinity(const FieldSpec& f) {
  return ProjPoint(Vector{f.one(), f.zero()});
}

ProjPoint ProjPoint::from_ints(const FieldSpec& f,
                               std::span<const long long> c) {
  Vector v;
  v.reserve(c.size());
  for (long long x : c) v.push_back(f.from_int(x));
  return ProjPoint(std::move(v));
}

std::strong_ordering ProjPoint::operator<=>(const ProjPoint& o) const {
  if (coords_.size() != o.coords_.size()) {
    return coords_.size() <=> o.coords_.size();
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const auto c = coords_[i] <=> o.coords_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

Matrix normalize_projective(Matrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      const Scalar inv = m(r, c).inverse();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= inv;
      }
      return m;
    }
  }
  return m;
}

bool projectively_equal(const Matrix& a, const Matrix& b) {
  return normalize_projective(a) == normalize_projective(b);
}

ProjPoint apply(const Matrix& m, const ProjPoint& p) {
  Vector image = m * p.coords();
  if (is_zero_vector(image)) {
    throw DegeneracyError("point lies in the kernel of the map");
  }
  return ProjPoint(std::move(image));
}

namespace {

void check_line_point(const ProjPoint& p) {
  if (p.ambient_dim() != 1) {
    throw ShapeError("expected a point of P^1, got one of P^" +
                     std::to_string(p.ambient_dim()));
  }
}

// Columns lambda*a, mu*b with lambda*a + mu*b = c: sends (1:0) -> a,
// (0:1) -> b, (1:1) -> c.
Matrix frame_matrix(const ProjPoint& a, const ProjPoint& b,
                    const ProjPoint& c) {
  check_line_point(a);
  check_line_point(b);
  check_line_point(c);
  if (a == b || a == c || b == c) {
    throw DegeneracyError("triple of P^1 points is not pairwise distinct");
  }
  const FieldSpec f = a.field();
  Matrix ab(f, 2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    ab(i, 0) = a.coords()[i];
    ab(i, 1) = b.coords()[i];
  }
  const std::optional<Vector> coef = solve(ab, c.coords());
  // Distinct a, b make ab invertible; distinct c keeps both coefficients
  // nonzero.
  if (!coef || (*coef)[0].is_zero() || (*coef)[1].is_zero()) {
    throw DegeneracyError("degenerate projective frame");
  }
  Matrix out(f, 2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    out(i, 0) = (*coef)[0] * a.coords()[i];
    out(i, 1) = (*coef)[1] * b.coords()[i];
  }
  return out;
}

}  // namespace

Matrix fit_pgl2(std::span<const ProjPoint, 3> src,
                std::span<const ProjPoint, 3> dst) {
  const Matrix from = frame_matrix(src[0], src[1], src[2]);
  const Matrix to = frame_matrix(dst[0], dst[1], dst[2]);
  if (from.field() != to.field()) throw FieldMismatch("triples over different fields");
  const std::optional<Matrix> from_inv = inverse(from);
  if (!from_inv) throw DegeneracyError("degenerate source frame");
  return normalize_projective(to * *from_inv);
}

std::optional<Matrix> projectively_equivalent(std::span<const ProjPoint> a,
                                              std::span<const ProjPoint> b) {
  if (a.size() != b.size()) {
    throw ShapeError("tuples of different lengths (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
  if (a.size() < 3) throw ShapeError("need at least three points");
  const Matrix m = fit_pgl2(a.first<3>(), b.first<3>());
  for (std::size_t j = 3; j < a.size(); ++j) {
    if (apply(m, a[j]) != b[j]) return std::nullopt;
  }
  return m;
}

}  // namespace segre
