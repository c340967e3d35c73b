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

#include "segre/linalg.hpp"

#include <utility>

#include "segre/error.hpp"

namespace segre {

Vector zero_vector(const FieldSpec& field, std::size_t n) {
  return Vector(n, field.zero());
}

bool is_zero_vector(std::span<const Scalar> v) {
  for (const Scalar& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector normalize_leading(Vector v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      if (v[i].is_one()) return v;
      const Scalar inv = v[i].inverse();
      for (std::size_t j = i; j < v.size(); ++j) v[j] *= inv;
      return v;
    }
  }
  return v;
}

std::string to_string(std::span<const Scalar> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(rows * cols, field.zero()) {
  if (cols == 0) throw ShapeError("matrix needs at least one column");
}

Matrix Matrix::from_rows(const FieldSpec& field,
                         const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ShapeError("ragged matrix: row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) {
        throw FieldMismatch("matrix entry from a different field");
      }
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }
}

Matrix Matrix::transpose() const {
  if (rows_ == 0) throw ShapeError("cannot transpose a matrix with no rows");
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product dimension mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  }
  return out;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector dimension mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ";";
    const Vector v = row(r);
    out += segre::to_string(v);
  }
  return out + "]";
}

Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, lead_row);
    const Scalar inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) -= f * m(lead_row, j);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& input) {
  Matrix m = input;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, lead_row);
    const Scalar inv = m(lead_row, c).inverse();
    for (std::size_t i = lead_row + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) -= f * m(lead_row, j);
      }
    }
    ++lead_row;
  }
  return lead_row;
}

std::vector<Vector> nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v[e.pivots[i]] = -e.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

Scalar determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw ShapeError("determinant of non-square matrix");
  Matrix m = input;
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t r = c;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) return m.field().zero();
    if (r != c) {
      m.swap_rows(r, c);
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  const Echelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

LinearSubspace LinearSubspace::zero(const FieldSpec& field,
                                    std::size_t ambient) {
  if (ambient == 0) throw ShapeError("subspace of a zero-dimensional space");
  return LinearSubspace(field, ambient);
}

LinearSubspace LinearSubspace::span(const FieldSpec& field, std::size_t ambient,
                                    const std::vector<Vector>& generators) {
  LinearSubspace s = zero(field, ambient);
  if (generators.empty()) return s;
  const Echelon e = rref(Matrix::from_rows(field, generators, ambient));
  if (e.reduced.cols() != ambient) {
    throw ShapeError("generator length differs from the ambient dimension");
  }
  for (std::size_t i = 0; i < e.rank(); ++i) {
    s.basis_.push_back(e.reduced.row(i));
  }
  s.pivots_ = e.pivots;
  return s;
}

Vector LinearSubspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw ShapeError("vector outside the ambient space");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_[i][j];
  }
  return v;
}

bool LinearSubspace::contains(std::span<const Scalar> v) const {
  return is_zero_vector(reduce(Vector(v.begin(), v.end())));
}

bool LinearSubspace::contains(const LinearSubspace& o) const {
  if (o.ambient_ != ambient_) throw ShapeError("ambient mismatch");
  for (const Vector& b : o.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

std::optional<Vector> LinearSubspace::coordinates(
    std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(basis_.size());
  for (std::size_t p : pivots_) c.push_back(v[p]);
  return c;
}

bool LinearSubspace::operator==(const LinearSubspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

namespace {

void check_compatible(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient() != b.ambient()) {
    throw ShapeError("subspaces live in different ambient spaces (" +
                     std::to_string(a.ambient()) + " vs " +
                     std::to_string(b.ambient()) + ")");
  }
  if (a.field() != b.field()) throw FieldMismatch("subspaces over different fields");
}

}  // namespace

LinearSubspace span_sum(const LinearSubspace& a, const LinearSubspace& b) {
  check_compatible(a, b);
  std::vector<Vector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return LinearSubspace::span(a.field(), a.ambient(), gens);
}

LinearSubspace span_intersect(const LinearSubspace& a,
                              const LinearSubspace& b) {
  check_compatible(a, b);
  if (a.rank() == 0 || b.rank() == 0) {
    return LinearSubspace::zero(a.field(), a.ambient());
  }
  // Columns a_1..a_r, b_1..b_s; a null vector (x, y) gives sum x_i a_i in A ∩ B.
  const std::size_t r = a.rank();
  const std::size_t s = b.rank();
  Matrix cols(a.field(), a.ambient(), r + s);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < a.ambient(); ++i) cols(i, j) = a.basis()[j][i];
  }
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < a.ambient(); ++i) {
      cols(i, r + j) = b.basis()[j][i];
    }
  }
  std::vector<Vector> gens;
  for (const Vector& null : nullspace(cols)) {
    Vector v = zero_vector(a.field(), a.ambient());
    for (std::size_t j = 0; j < r; ++j) {
      if (null[j].is_zero()) continue;
      for (std::size_t i = 0; i < a.ambient(); ++i) {
        v[i] += null[j] * a.basis()[j][i];
      }
    }
    gens.push_back(std::move(v));
  }
  return LinearSubspace::span(a.field(), a.ambient(), gens);
}

}  // namespace segre
