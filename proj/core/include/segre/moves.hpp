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

// Elementary increasing / decreasing moves and linear projections of one
// factor.

#ifndef SEGRE_MOVES_HPP_
#define SEGRE_MOVES_HPP_

#include <span>

#include "segre/invariants.hpp"
#include "segre/random.hpp"

namespace segre {

struct IncreaseResult {
  PointSet set;
  bool independent;
  int attempts;
};

// Replaces o by two points o', o'' on a random line L through pi_i(o), away
// from pi_i(S), keeping the other factors of o. Retries up to `retries`
// times looking for an independent result; otherwise returns the last
// attempt with independent = false. Throws PreconditionError if S is
// dependent or #S = r + 1, and FieldTooSmall if no line through pi_i(o) has
// two points outside pi_i(S).
IncreaseResult elementary_increase(const PointSet& s, const MPoint& o,
                                   std::size_t i, Rng& rng, int retries = 64);

// For a, b in S differing only in factor i and q in <nu(S)>: returns
// (S \ {a, b}) u {o} with o on the line through pi_i(a), pi_i(b) and
// q in <nu(result)>, or S \ {a, b} when that already spans q.
PointSet elementary_decrease(const PointSet& s, std::span<const Scalar> q,
                             const MPoint& a, const MPoint& b, std::size_t i);

struct ProjectionResult {
  PointSet image;
  bool injective;
};

// Projects factor i from the center V (a subspace of K^{n_i + 1} with
// 0 <= proj_dim V <= n_i - 2). Throws PreconditionError if a point of
// pi_i(S) lies in V.
ProjectionResult linear_project(const PointSet& s, std::size_t i,
                                const LinearSubspace& center);

}  // namespace segre

#endif  // SEGRE_MOVES_HPP_
