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

#include "segre/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "segre/error.hpp"

namespace segre {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u32 mul_mod(u32 a, u32 b, u32 p) {
  return static_cast<u32>(static_cast<u64>(a) * b % p);
}

u32 pow_mod(u32 a, u64 e, u32 p) {
  u32 r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u32 inv_mod(u32 a, u32 p) { return pow_mod(a, p - 2, p); }

double binomial(double n, double k) {
  if (k < 0 || k > n) return 0;
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

}  // namespace

PointTable::PointTable(Shape shape, FieldSpec field)
    : shape_(std::move(shape)), field_(field), p_(field.modulus()), lookup_ok_(false) {
  if (!field_.is_prime()) throw UnsupportedError("enumeration needs a prime field");
  const std::size_t k = shape_.k();
  factor_sizes_.resize(k);
  factor_coords_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<ProjPoint> pts = projective_points(field_, shape_.n(i));
    factor_sizes_[i] = pts.size();
    for (const ProjPoint& q : pts) {
      for (const Scalar& c : q.coords()) factor_coords_[i].push_back(c.residue_value());
    }
  }
  strides_.assign(k, 1);
  for (std::size_t i = k - 1; i > 0; --i) strides_[i - 1] = strides_[i] * factor_sizes_[i];
  points_ = rational_points(shape_, field_);

  const std::size_t n = ambient();
  emb_.reserve(points_.size() * n);
  std::vector<u32> acc;
  std::vector<u32> next;
  for (std::size_t idx = 0; idx < points_.size(); ++idx) {
    // Each factor starts with a leading 1, so the product is normalized.
    acc.assign(1, 1);
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = factor_coords(i, factor_index(idx, i));
      next.clear();
      for (u32 x : acc) {
        for (u32 y : c) next.push_back(mul_mod(x, y, p_));
      }
      acc.swap(next);
    }
    emb_.insert(emb_.end(), acc.begin(), acc.end());
  }
  lookup_ok_ = static_cast<double>(n) * std::log2(static_cast<double>(p_)) < 63.0;
  if (lookup_ok_) {
    lookup_.reserve(points_.size() * 2);
    for (std::size_t idx = 0; idx < points_.size(); ++idx) {
      lookup_.emplace(key(embedded(idx)), static_cast<u32>(idx));
    }
  }
}

std::span<const u32> PointTable::embedded(std::size_t idx) const {
  const std::size_t n = ambient();
  return {emb_.data() + idx * n, n};
}

std::size_t PointTable::factor_index(std::size_t idx, std::size_t i) const {
  return idx / strides_[i] % factor_sizes_[i];
}

std::size_t PointTable::eta_key(std::size_t idx, std::size_t i) const {
  return idx - factor_index(idx, i) * strides_[i];
}

std::span<const u32> PointTable::factor_coords(std::size_t i, std::size_t f) const {
  const auto d = static_cast<std::size_t>(shape_.n(i) + 1);
  return {factor_coords_[i].data() + f * d, d};
}

u64 PointTable::key(std::span<const u32> v) const {
  u64 h = 0;
  for (std::size_t t = v.size(); t > 0; --t) h = h * p_ + v[t - 1];
  return h;
}

std::optional<std::size_t> PointTable::find_embedded(std::span<const u32> v) const {
  if (lookup_ok_) {
    const auto it = lookup_.find(key(v));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  for (std::size_t idx = 0; idx < points_.size(); ++idx) {
    const auto e = embedded(idx);
    if (std::equal(e.begin(), e.end(), v.begin(), v.end())) return idx;
  }
  return std::nullopt;
}

std::size_t PointTable::index_of(const MPoint& p) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) {
    throw PreconditionError("point " + p.to_string() + " is not in the table");
  }
  return static_cast<std::size_t>(it - points_.begin());
}

PointSet PointTable::make_set(std::span<const u32> indices) const {
  std::vector<MPoint> pts;
  pts.reserve(indices.size());
  for (u32 i : indices) pts.push_back(points_[i]);
  return PointSet(shape_, field_, std::move(pts));
}

std::size_t rank_mod_p(std::vector<u32> rows, std::size_t cols, u32 p) {
  if (cols == 0) return 0;
  const std::size_t nrows = rows.size() / cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < nrows; ++c) {
    std::size_t piv = rank;
    while (piv < nrows && rows[piv * cols + c] == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != rank) {
      std::swap_ranges(rows.begin() + piv * cols, rows.begin() + (piv + 1) * cols,
                       rows.begin() + rank * cols);
    }
    const u32 inv = inv_mod(rows[rank * cols + c], p);
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      const u32 f = mul_mod(rows[r * cols + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        rows[r * cols + j] =
            (rows[r * cols + j] + p - mul_mod(f, rows[rank * cols + j], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

double estimate_work(const EnumTask& task) {
  const double y = static_cast<double>(count_rational_points(task.shape, task.field.modulus()));
  const double s = task.cardinality;
  return task.reduction == Reduction::kFixFirstPoint ? binomial(y - 1, s - 1)
                                                     : binomial(y, s);
}

namespace {

class Engine {
 public:
  Engine(const EnumTask& task, const PointTable& table,
         const std::function<void(const EnumHit&)>& fn)
      : task_(task), t_(table), fn_(fn), p_(table.p()), n_(table.ambient()),
        s_(static_cast<std::size_t>(task.cardinality)), k_(table.shape().k()) {
    const EnumFilters& f = task.filters;
    min_e_ = f.circuit ? 1 : std::max(0, f.min_defect);
    max_e_ = f.circuit ? 1 : f.max_defect.value_or(static_cast<int>(s_));
    if (f.circuit && (f.min_defect > 1 || (f.max_defect && *f.max_defect < 1))) {
      max_e_ = -1;  // contradictory filters: nothing passes
    }
    chosen_.resize(s_);
    rows_.resize(s_ * n_);
    pivots_.resize(s_);
    combs_.resize(s_ * s_);
    row_comb_.resize(s_ * s_);
    scratch_.resize(n_);
    part_level_ = task.reduction == Reduction::kFixFirstPoint ? 1 : 0;
  }

  EnumStats run() {
    if (max_e_ < min_e_ || s_ > t_.size()) return stats_;
    if (task_.reduction == Reduction::kFixFirstPoint) {
      visit(0, 0, nullptr);
    } else {
      for (std::size_t idx = 0; idx + s_ <= t_.size(); ++idx) {
        if (!in_partition(0, idx)) continue;
        visit(0, idx, nullptr);
      }
    }
    return stats_;
  }

 private:
  bool in_partition(std::size_t depth, std::size_t idx) const {
    return depth != part_level_ || idx % task_.worker_count == task_.worker_index;
  }

  // Reduces v against the current rows. Returns true if v is independent,
  // in which case it becomes a new row. comb tracks v in terms of chosen_.
  bool insert(std::size_t depth, std::span<const u32> v) {
    u32* r = scratch_.data();
    std::copy(v.begin(), v.end(), r);
    u32* comb = combs_.data() + depth * s_;
    std::fill(comb, comb + s_, 0);
    comb[depth] = 1;
    for (std::size_t j = 0; j < rank_; ++j) {
      const u32 c = r[pivots_[j]];
      if (c == 0) continue;
      const u32* row = rows_.data() + j * n_;
      for (std::size_t x = pivots_[j]; x < n_; ++x) {
        if (row[x]) r[x] = (r[x] + p_ - mul_mod(c, row[x], p_)) % p_;
      }
      const u32* rc = row_comb_.data() + j * s_;
      for (std::size_t x = 0; x <= depth; ++x) {
        if (rc[x]) comb[x] = (comb[x] + p_ - mul_mod(c, rc[x], p_)) % p_;
      }
    }
    std::size_t piv = 0;
    while (piv < n_ && r[piv] == 0) ++piv;
    if (piv == n_) return false;
    const u32 inv = inv_mod(r[piv], p_);
    u32* dst = rows_.data() + rank_ * n_;
    for (std::size_t x = 0; x < n_; ++x) dst[x] = mul_mod(r[x], inv, p_);
    u32* dc = row_comb_.data() + rank_ * s_;
    for (std::size_t x = 0; x < s_; ++x) dc[x] = mul_mod(comb[x], inv, p_);
    pivots_[rank_] = piv;
    ++rank_;
    return true;
  }

  bool minimal_ok(std::size_t depth, std::size_t idx) const {
    for (std::size_t j = 0; j < depth; ++j) {
      for (std::size_t i = 0; i < k_; ++i) {
        if (t_.eta_key(chosen_[j], i) == t_.eta_key(idx, i)) return false;
      }
    }
    return true;
  }

  bool nondegenerate_ok() const {
    std::vector<u32> m;
    std::vector<std::size_t> seen;
    for (std::size_t i = 0; i < k_; ++i) {
      const auto need = static_cast<std::size_t>(t_.shape().n(i) + 1);
      seen.clear();
      for (std::size_t j = 0; j < s_; ++j) seen.push_back(t_.factor_index(chosen_[j], i));
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      if (seen.size() < need) return false;
      m.clear();
      for (std::size_t f : seen) {
        const auto c = t_.factor_coords(i, f);
        m.insert(m.end(), c.begin(), c.end());
      }
      if (rank_mod_p(m, need, p_) < need) return false;
    }
    return true;
  }

  // Indices > last whose embedding lies in the current span, ascending.
  std::vector<u32> span_candidates(std::size_t last) const {
    std::vector<std::size_t> order(rank_);
    for (std::size_t j = 0; j < rank_; ++j) order[j] = j;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<u32> out;
    std::vector<u32> coef(rank_);
    std::vector<u32> v(n_);
    for (std::size_t lead = 0; lead < rank_; ++lead) {
      std::fill(coef.begin(), coef.end(), 0);
      coef[lead] = 1;
      while (true) {
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t b = lead; b < rank_; ++b) {
          if (coef[b] == 0) continue;
          const u32* row = rows_.data() + order[b] * n_;
          for (std::size_t x = 0; x < n_; ++x) {
            if (row[x]) v[x] = (v[x] + mul_mod(coef[b], row[x], p_)) % p_;
          }
        }
        if (const auto idx = t_.find_embedded(v); idx && *idx > last) {
          out.push_back(static_cast<u32>(*idx));
        }
        // Odometer over positions lead+1 .. rank_-1.
        std::size_t pos = rank_;
        bool advanced = false;
        while (pos > lead + 1) {
          --pos;
          if (++coef[pos] < p_) {
            advanced = true;
            break;
          }
          coef[pos] = 0;
        }
        if (!advanced) break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Place index idx at position depth, then recurse.
  void visit(std::size_t depth, std::size_t idx, const std::vector<u32>* list) {
    ++stats_.nodes;
    if (task_.filters.minimal && !minimal_ok(depth, idx)) return;
    const std::size_t rank_before = rank_;
    chosen_[depth] = static_cast<u32>(idx);
    const bool indep = insert(depth, t_.embedded(idx));
    const std::size_t size = depth + 1;
    auto restore = [&] { rank_ = rank_before; };

    if (task_.filters.circuit && size < s_ && !indep) return restore();
    if (rank_ > s_ - static_cast<std::size_t>(min_e_)) return restore();
    if (static_cast<long>(rank_ + (s_ - size)) < static_cast<long>(s_) - max_e_) {
      return restore();
    }
    if (size == s_) {
      leaf(depth, indep);
      return restore();
    }
    std::vector<u32> local;
    if (!list && min_e_ > 0 && rank_ == s_ - static_cast<std::size_t>(min_e_) &&
        t_.lookup_available()) {
      const double span = (std::pow(static_cast<double>(p_), rank_) - 1) / (p_ - 1);
      const double remaining = static_cast<double>(t_.size() - idx - 1);
      if (span <= 4 * remaining) {
        local = span_candidates(idx);
        list = &local;
      }
    }
    const std::size_t need = s_ - size;
    if (list) {
      auto it = std::upper_bound(list->begin(), list->end(), static_cast<u32>(idx));
      for (; it != list->end(); ++it) {
        if (static_cast<std::size_t>(list->end() - it) < need) break;
        if (!in_partition(size, *it)) continue;
        visit(size, *it, list);
      }
    } else {
      for (std::size_t nx = idx + 1; nx + need <= t_.size(); ++nx) {
        if (!in_partition(size, nx)) continue;
        visit(size, nx, nullptr);
      }
    }
    restore();
  }

  void leaf(std::size_t depth, bool last_indep) {
    const int e = static_cast<int>(s_ - rank_);
    if (e < min_e_ || e > max_e_) return;
    if (task_.filters.circuit) {
      if (last_indep) return;
      const u32* comb = combs_.data() + depth * s_;
      for (std::size_t x = 0; x <= depth; ++x) {
        if (comb[x] == 0) return;
      }
    }
    if (task_.filters.nondegenerate && !nondegenerate_ok()) return;
    ++stats_.emitted;
    fn_(EnumHit{&t_, std::span<const u32>(chosen_.data(), s_), e});
  }

  const EnumTask& task_;
  const PointTable& t_;
  const std::function<void(const EnumHit&)>& fn_;
  u32 p_;
  std::size_t n_;
  std::size_t s_;
  std::size_t k_;
  int min_e_;
  int max_e_;
  std::size_t part_level_;
  std::vector<u32> chosen_;
  std::vector<u32> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<u32> combs_;
  std::vector<u32> row_comb_;
  std::vector<u32> scratch_;
  std::size_t rank_ = 0;
  EnumStats stats_;
};

void validate(const EnumTask& task, const PointTable& table) {
  if (!task.field.is_prime()) throw UnsupportedError("enumeration needs a prime field");
  if (task.cardinality < 2) throw PreconditionError("cardinality must be >= 2");
  if (task.worker_count == 0 || task.worker_index >= task.worker_count) {
    throw PreconditionError("invalid partition");
  }
  if (table.shape() != task.shape || table.field() != task.field) {
    throw ShapeError("point table does not match the task");
  }
  const double est = estimate_work(task);
  if (est > task.budget) {
    throw BudgetExceeded("task needs about " + std::to_string(static_cast<u64>(est)) +
                             " subset visits, budget is " +
                             std::to_string(static_cast<u64>(task.budget)),
                         est);
  }
}

u64 corrected_total(const EnumTask& task, const PointTable& table, u64 emitted) {
  if (task.reduction == Reduction::kNone) return emitted;
  const u64 num = emitted * table.size();
  const auto s = static_cast<u64>(task.cardinality);
  if (num % s != 0) {
    throw Error("incidence count " + std::to_string(num) + " is not divisible by " +
                std::to_string(s));
  }
  return num / s;
}

}  // namespace

EnumStats enumerate_sets(const EnumTask& task, const PointTable& table,
                         const std::function<void(const EnumHit&)>& fn) {
  validate(task, table);
  EnumStats stats = Engine(task, table, fn).run();
  if (task.worker_count == 1) stats.total = corrected_total(task, table, stats.emitted);
  return stats;
}

EnumStats enumerate_sets(const EnumTask& task,
                         const std::function<void(const EnumHit&)>& fn) {
  if (!task.field.is_prime()) throw UnsupportedError("enumeration needs a prime field");
  const PointTable table(task.shape, task.field);
  return enumerate_sets(task, table, fn);
}

EnumStats enumerate_parallel(
    const EnumTask& task, const PointTable& table, std::size_t jobs,
    const std::function<void(const EnumHit&, std::size_t worker)>& fn) {
  validate(task, table);
  jobs = std::max<std::size_t>(jobs, 1);
  std::vector<EnumStats> per(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](std::size_t w) {
    try {
      EnumTask sub = task;
      sub.worker_count = task.worker_count * jobs;
      sub.worker_index = task.worker_index + task.worker_count * w;
      std::function<void(const EnumHit&)> cb = [&, w](const EnumHit& h) { fn(h, w); };
      per[w] = Engine(sub, table, cb).run();
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (std::thread& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  EnumStats out;
  for (const EnumStats& s : per) {
    out.emitted += s.emitted;
    out.nodes += s.nodes;
  }
  if (task.worker_count == 1) out.total = corrected_total(task, table, out.emitted);
  return out;
}

}  // namespace segre
