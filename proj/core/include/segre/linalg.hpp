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

// Dense exact linear algebra over a FieldSpec.
//
// Elimination always pivots on the first nonzero column, topmost candidate
// row, so every routine is deterministic.

#ifndef SEGRE_LINALG_HPP_
#define SEGRE_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segre/field.hpp"

namespace segre {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
bool is_zero_vector(std::span<const Scalar> v);
// Scales so the first nonzero entry is 1. Zero vectors are returned as is.
Vector normalize_leading(Vector v);
std::string to_string(std::span<const Scalar> v);

class Matrix {
 public:
  // A rows x cols zero matrix; cols must be >= 1.
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  // Throws ShapeError on ragged input. `cols` is used when rows is empty.
  static Matrix from_rows(const FieldSpec& field,
                          const std::vector<Vector>& rows,
                          std::size_t cols = 0);
  static Matrix identity(const FieldSpec& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(std::span<const Scalar> v) const;

  bool operator==(const Matrix& o) const;
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of { x : m x = 0 }.
std::vector<Vector> nullspace(const Matrix& m);
// Some x with m x = b (free variables set to zero), if one exists.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// A subspace of K^N stored by its reduced echelon basis. The projective
// dimension is rank - 1, so the zero subspace has proj_dim -1.
class LinearSubspace {
 public:
  static LinearSubspace span(const FieldSpec& field, std::size_t ambient,
                             const std::vector<Vector>& generators);
  static LinearSubspace zero(const FieldSpec& field, std::size_t ambient);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t rank() const { return basis_.size(); }
  long proj_dim() const { return static_cast<long>(basis_.size()) - 1; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const LinearSubspace& o) const;
  // Coordinates of v in the stored basis; nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  // v minus its projection onto the span along the pivot coordinates.
  Vector reduce(Vector v) const;

  bool operator==(const LinearSubspace& o) const;

 private:
  LinearSubspace(FieldSpec field, std::size_t ambient)
      : field_(field), ambient_(ambient) {}

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

LinearSubspace span_sum(const LinearSubspace& a, const LinearSubspace& b);
// A ∩ B. Throws ShapeError if the ambient spaces differ.
LinearSubspace span_intersect(const LinearSubspace& a, const LinearSubspace& b);

}  // namespace segre

#endif  // SEGRE_LINALG_HPP_
