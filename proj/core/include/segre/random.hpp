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

// Seeded sampling of scalars, points and matrices. Only the raw 64-bit
// engine output is used, so draws are identical on every standard library.

#ifndef SEGRE_RANDOM_HPP_
#define SEGRE_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "segre/multiprojective.hpp"

namespace segre {

using Rng = std::mt19937_64;

// Uniform in [0, n), n >= 1.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

// Uniform over GF(p); over Q an integer in [-bound, bound].
Scalar random_scalar(const FieldSpec& field, Rng& rng, int bound = 4);
Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng, int bound = 4);
// Over GF(p) uniform over P^n(F_p); over Q a random integer vector.
ProjPoint random_proj_point(const FieldSpec& field, int n, Rng& rng,
                            int bound = 4);
MPoint random_mpoint(const Shape& shape, const FieldSpec& field, Rng& rng,
                     int bound = 4);
// Random invertible n x n matrix (rejection sampling).
Matrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng,
                         int bound = 4);

}  // namespace segre

#endif  // SEGRE_RANDOM_HPP_
