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

// Linear invariants of finite subsets of Y computed through the Segre
// embedding: defect e(S), circuits, essential points, minimality and the
// minimal multiprojective subspace.

#ifndef SEGRE_INVARIANTS_HPP_
#define SEGRE_INVARIANTS_HPP_

#include <optional>
#include <vector>

#include "segre/multiprojective.hpp"

namespace segre {

// Kronecker product of the factor vectors, factor 1 most significant,
// normalized so the first nonzero entry is 1.
Vector segre_embed(const Shape& shape, const MPoint& p);
// Kronecker product over the factors selected by the pattern only.
Vector embed_pattern(const MPoint& p, const Pattern& a);
// One row per point of S, in the set's order.
Matrix embedding_matrix(const PointSet& s);
Matrix pattern_matrix(const PointSet& s, const Pattern& a);

struct Defect {
  long span_dim;
  long e;
};

// Throws PreconditionError on the empty set.
Defect defect(const PointSet& s);
// #S - rank of the pattern evaluation matrix.
long defect_pattern(const PointSet& s, const Pattern& a);

// eta_i(S): forget factor i. Needs k >= 2. Coincident images are merged.
PointSet forget_factor(const PointSet& s, std::size_t i);

struct MinimalSubspace {
  std::vector<int> dims;                // dim <pi_i(S)> for every factor
  std::vector<LinearSubspace> frames;   // spans of pi_i(S)
  std::optional<PointSet> reduced;      // S in frame coordinates, 0-dim factors dropped
};

MinimalSubspace minimal_subspace(const PointSet& s);
bool is_nondegenerate(const PointSet& s);

struct Minimality {
  bool overall;
  std::vector<bool> per_factor;
};

Minimality is_minimal(const PointSet& s);
bool is_circuit(const PointSet& s);

struct EssentialPartition {
  PointSet kernel;
  PointSet tail;
};

// Throws PreconditionError if S is linearly independent.
EssentialPartition essential_partition(const PointSet& s);
// Throws PreconditionError if S is linearly independent.
bool is_strongly_essential(const PointSet& s);

struct DefectReport {
  long span_dim;
  long defect_e;
  PointSet kernel;
  PointSet tail;
  std::vector<bool> essential_flags;  // indexed like s.points()
  bool minimal;
  std::vector<bool> i_minimal;
  std::vector<int> minimal_subspace_dims;
  bool nondegenerate;
  bool circuit;
  bool strongly_essential;
};

// Independent sets get an empty kernel, the whole set as tail and
// strongly_essential = false.
DefectReport analyze(const PointSet& s);

}  // namespace segre

#endif  // SEGRE_INVARIANTS_HPP_
