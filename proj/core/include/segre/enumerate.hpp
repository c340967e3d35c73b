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

// Exhaustive enumeration of s-subsets of Y(F_p) with defect, circuit,
// minimality and nondegeneracy filters.
//
// Points are indexed by their position in the ascending canonical order of
// Y(F_p), and subsets are visited in lexicographic order of index tuples.
// Linear algebra here runs on raw residues instead of Scalar values.

#ifndef SEGRE_ENUMERATE_HPP_
#define SEGRE_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "segre/invariants.hpp"

namespace segre {

inline constexpr double kDefaultBudget = 2e8;

// Y(F_p) with embedded coordinates and per-factor data.
class PointTable {
 public:
  // Throws UnsupportedError over Q.
  PointTable(Shape shape, FieldSpec field);

  const Shape& shape() const { return shape_; }
  const FieldSpec& field() const { return field_; }
  std::uint32_t p() const { return p_; }
  std::size_t size() const { return points_.size(); }
  std::size_t ambient() const { return shape_.ambient_size(); }

  const MPoint& point(std::size_t idx) const { return points_[idx]; }
  const std::vector<MPoint>& points() const { return points_; }
  // Normalized Segre coordinates as residues.
  std::span<const std::uint32_t> embedded(std::size_t idx) const;
  // Index of the point's i-th factor in projective_points(field, n_i).
  std::size_t factor_index(std::size_t idx, std::size_t i) const;
  // Equal for two points iff they agree off factor i.
  std::size_t eta_key(std::size_t idx, std::size_t i) const;
  std::span<const std::uint32_t> factor_coords(std::size_t i, std::size_t f) const;
  // Index of the point whose normalized embedding is v, if any.
  std::optional<std::size_t> find_embedded(std::span<const std::uint32_t> v) const;
  bool lookup_available() const { return lookup_ok_; }
  // Index of an MPoint of this space.
  std::size_t index_of(const MPoint& p) const;

  PointSet make_set(std::span<const std::uint32_t> indices) const;

 private:
  std::uint64_t key(std::span<const std::uint32_t> v) const;

  Shape shape_;
  FieldSpec field_;
  std::uint32_t p_;
  std::vector<MPoint> points_;
  std::vector<std::uint32_t> emb_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> factor_sizes_;
  std::vector<std::vector<std::uint32_t>> factor_coords_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  bool lookup_ok_;
};

// Rank of rows (each `cols` residues long, row-major) modulo p.
std::size_t rank_mod_p(std::vector<std::uint32_t> rows, std::size_t cols,
                       std::uint32_t p);

struct EnumFilters {
  bool nondegenerate = false;
  bool minimal = false;
  bool circuit = false;  // forces min_defect = max_defect = 1
  int min_defect = 0;
  std::optional<int> max_defect;
};

enum class Reduction { kNone, kFixFirstPoint };

struct EnumTask {
  Shape shape;
  FieldSpec field;
  int cardinality;
  EnumFilters filters;
  Reduction reduction = Reduction::kNone;
  // Candidates for the partitioned level (the second point under reduction,
  // the first otherwise) are dealt out by index modulo worker_count.
  std::size_t worker_index = 0;
  std::size_t worker_count = 1;
  double budget = kDefaultBudget;
};

struct EnumHit {
  const PointTable* table;
  std::span<const std::uint32_t> indices;
  int e;

  PointSet point_set() const { return table->make_set(indices); }
  DefectReport report() const { return analyze(point_set()); }
};

struct EnumStats {
  std::uint64_t emitted = 0;
  // Incidence-corrected under reduction (emitted * |Y| / s), else emitted.
  std::uint64_t total = 0;
  std::uint64_t nodes = 0;
};

// C(|Y| - 1, s - 1) under reduction, C(|Y|, s) otherwise.
double estimate_work(const EnumTask& task);

// Throws BudgetExceeded before doing any work when estimate_work exceeds the
// budget, PreconditionError when s < 2, UnsupportedError over Q.
EnumStats enumerate_sets(const EnumTask& task, const PointTable& table,
                         const std::function<void(const EnumHit&)>& fn);
EnumStats enumerate_sets(const EnumTask& task,
                         const std::function<void(const EnumHit&)>& fn);

// Runs `jobs` threads over a finer partition of the task. fn receives the
// worker number and may be called concurrently for different workers.
EnumStats enumerate_parallel(
    const EnumTask& task, const PointTable& table, std::size_t jobs,
    const std::function<void(const EnumHit&, std::size_t worker)>& fn);

}  // namespace segre

#endif  // SEGRE_ENUMERATE_HPP_
