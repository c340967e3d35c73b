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

#include "segre/random.hpp"

#include <limits>

#include "segre/error.hpp"

namespace segre {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw PreconditionError("uniform_below(0)");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

Scalar random_scalar(const FieldSpec& field, Rng& rng, int bound) {
  if (field.is_prime()) {
    return Scalar::residue(
        static_cast<std::uint32_t>(uniform_below(rng, field.modulus())),
        field.modulus());
  }
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return field.from_int(static_cast<long long>(uniform_below(rng, span)) - bound);
}

Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng, int bound) {
  while (true) {
    Scalar s = random_scalar(field, rng, bound);
    if (!s.is_zero()) return s;
  }
}

ProjPoint random_proj_point(const FieldSpec& field, int n, Rng& rng,
                            int bound) {
  if (field.is_prime()) {
    // Uniform over points: pick an index among |P^n(F_p)| points.
    const std::uint32_t p = field.modulus();
    std::uint64_t idx = uniform_below(rng, count_projective_points(p, n));
    // Points with leading 1 at position n - j number p^j.
    std::uint64_t block = 1;
    int lead = n;
    while (idx >= block) {
      idx -= block;
      block *= p;
      --lead;
    }
    Vector v = zero_vector(field, n + 1);
    v[lead] = field.one();
    for (int j = n; j > lead; --j) {
      v[j] = Scalar::residue(static_cast<std::uint32_t>(idx % p), p);
      idx /= p;
    }
    return ProjPoint(std::move(v));
  }
  while (true) {
    Vector v;
    for (int i = 0; i <= n; ++i) v.push_back(random_scalar(field, rng, bound));
    if (!is_zero_vector(v)) return ProjPoint(std::move(v));
  }
}

MPoint random_mpoint(const Shape& shape, const FieldSpec& field, Rng& rng,
                     int bound) {
  std::vector<ProjPoint> f;
  f.reserve(shape.k());
  for (int n : shape.dims()) f.push_back(random_proj_point(field, n, rng, bound));
  return MPoint(std::move(f));
}

Matrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng,
                         int bound) {
  while (true) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_scalar(field, rng, bound);
    }
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace segre
