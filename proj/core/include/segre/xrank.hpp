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

// X-rank by exhaustive search, irredundant spanning, circuit partition
// points and the divisor-residual check for pairs of spanning sets.

#ifndef SEGRE_XRANK_HPP_
#define SEGRE_XRANK_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segre/invariants.hpp"

namespace segre {

struct RankWitness {
  Vector target_q;
  std::optional<int> rank;          // empty: rank > cap
  std::vector<PointSet> witnesses;  // all A with #A = rank and q in <nu(A)>
};

// Searches subsets of Y(F_p) of size 1..cap. Throws UnsupportedError over Q
// and PreconditionError on q = 0 or cap < 1.
RankWitness x_rank(std::span<const Scalar> q, const Shape& shape,
                   const FieldSpec& field, int cap);

// The single point of <nu(A)> n <nu(S \ A)>. Throws PreconditionError when
// A is empty or all of S, or when the intersection is not one point.
Vector circuit_partition_point(const PointSet& s, const PointSet& a);

bool irredundantly_spans(std::span<const Scalar> q, const PointSet& a);

struct LemmaCheck {
  bool precondition_ok;
  std::string violation;  // set when precondition_ok is false
  bool hypothesis_holds;
  bool conclusion_holds;
};

// D = pi_i^{-1}(H) for the hyperplane H = { x : h . x = 0 } of factor i.
// hypothesis: h^1 of (A u B) \ D twisted by eps_hat_i vanishes.
// conclusion: A \ D == B \ D.
LemmaCheck check_lemma_ee0(std::span<const Scalar> q, const PointSet& a,
                           const PointSet& b, std::size_t i,
                           std::span<const Scalar> h);

// Points of S outside pi_i^{-1}(H).
PointSet outside_divisor(const PointSet& s, std::size_t i,
                         std::span<const Scalar> h);

}  // namespace segre

#endif  // SEGRE_XRANK_HPP_
