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

#include "segre/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "segre/error.hpp"
#include "segre/rnc.hpp"
#include "segre/xrank.hpp"

namespace segre {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Thread-safe sink for counterexamples and failure messages.
class Sink {
 public:
  Sink(VerificationReport& rep, std::size_t cap) : rep_(rep), cap_(cap) {}

  void counterexample(PointSet s, const std::string& why) {
    std::lock_guard<std::mutex> lock(mu_);
    if (rep_.counterexamples.size() < cap_) {
      rep_.counterexamples.push_back(std::move(s));
      rep_.failures.push_back(why);
    } else {
      ++omitted_;
    }
  }

  void failure(const std::string& why) {
    std::lock_guard<std::mutex> lock(mu_);
    rep_.failures.push_back(why);
  }

  // Records the omitted count and the elapsed time.
  void finish(Clock::time_point start) {
    if (omitted_ > 0) {
      rep_.failures.push_back(std::to_string(omitted_) + " further counterexamples omitted");
    }
    rep_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }

 private:
  VerificationReport& rep_;
  std::size_t cap_;
  std::size_t omitted_ = 0;
  std::mutex mu_;
};

std::string field_name(u32 p) { return FieldSpec::prime(p).to_string(); }

void add_count(VerificationReport& rep, u32 p, const std::string& shape,
               const std::string& what, u64 value) {
  rep.counts.push_back({field_name(p), shape, what, value});
}

void note_field(VerificationReport& rep, u32 p) {
  if (std::find(rep.fields_checked.begin(), rep.fields_checked.end(), p) ==
      rep.fields_checked.end()) {
    rep.fields_checked.push_back(p);
  }
}

void note_shape(VerificationReport& rep, const Shape& s) {
  const std::string name = s.to_string();
  if (std::find(rep.shapes_checked.begin(), rep.shapes_checked.end(), name) ==
      rep.shapes_checked.end()) {
    rep.shapes_checked.push_back(name);
  }
}

u64 binom(u64 n, u64 k) {
  if (k > n) return 0;
  u64 r = 1;
  for (u64 j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::size_t fast_rank(const PointTable& t, std::span<const u32> idx) {
  std::vector<u32> rows;
  rows.reserve(idx.size() * t.ambient());
  for (u32 i : idx) {
    const auto e = t.embedded(i);
    rows.insert(rows.end(), e.begin(), e.end());
  }
  return rank_mod_p(std::move(rows), t.ambient(), t.p());
}

bool fast_is_circuit(const PointTable& t, std::span<const u32> idx) {
  if (fast_rank(t, idx) + 1 != idx.size()) return false;
  std::vector<u32> sub;
  for (std::size_t skip = 0; skip < idx.size(); ++skip) {
    sub.clear();
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (j != skip) sub.push_back(idx[j]);
    }
    if (fast_rank(t, sub) != sub.size()) return false;
  }
  return true;
}

// Set of point indices of a table.
class IndexMask {
 public:
  explicit IndexMask(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= u64{1} << (i % 64); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  bool contains_all(std::span<const u32> idx) const {
    return std::all_of(idx.begin(), idx.end(), [&](u32 i) { return test(i); });
  }

 private:
  std::vector<u64> words_;
};

std::vector<IndexMask> curve_masks(const PointTable& t, std::size_t k) {
  std::vector<IndexMask> out;
  enumerate_b_k(t.field(), k, [&](const RncCurve& c) {
    IndexMask m(t.size());
    for (const MPoint& q : curve_points(c)) m.set(t.index_of(q));
    out.push_back(std::move(m));
  });
  return out;
}

// Checks on one 4-point circuit of (1,1); returns an error description or "".
std::string check_e2_pair(const PointSet& s) {
  const FieldSpec f = s.field();
  const std::vector<Vector> forms = nullspace(embedding_matrix(s));
  if (forms.size() != 1) {
    return "(1,1)-forms through S have dimension " + std::to_string(forms.size());
  }
  Matrix m(f, 2, 2);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) m(a, b) = forms[0][a * 2 + b];
  }
  const bool singular = determinant(m).is_zero();
  const bool minimal = is_minimal(s).overall;
  if (singular == minimal) {
    return std::string("form is ") + (singular ? "singular" : "smooth") +
           " but S is " + (minimal ? "minimal" : "not minimal");
  }
  // Halves A (as index masks over the 4 sorted points) to test.
  std::vector<std::vector<std::size_t>> halves;
  if (!singular) {
    for (std::size_t j = 1; j < 4; ++j) halves.push_back({0, j});
  } else {
    // xT M = 0 cuts D_1, M y = 0 cuts D_2.
    std::vector<std::size_t> d1;
    std::vector<std::size_t> d2;
    for (std::size_t j = 0; j < 4; ++j) {
      const Vector& x = s[j].factor(0).coords();
      const Vector& y = s[j].factor(1).coords();
      const Vector xm = m.transpose() * x;
      const Vector my = m * y;
      const bool in1 = is_zero_vector(xm);
      const bool in2 = is_zero_vector(my);
      if (in1 && in2) return "a point of S lies on D_1 n D_2";
      if (in1) d1.push_back(j);
      if (in2) d2.push_back(j);
    }
    if (d1.size() != 2 || d2.size() != 2) {
      return "reducible form splits S as " + std::to_string(d1.size()) + "+" +
             std::to_string(d2.size());
    }
    halves.push_back({d1[0], d2[0]});
    halves.push_back({d1[0], d2[1]});
  }
  for (const auto& h : halves) {
    const PointSet a = s.subset(h);
    const PointSet b = s.minus(a);
    Vector q;
    try {
      q = circuit_partition_point(s, a);
    } catch (const PreconditionError& err) {
      return std::string("partition point: ") + err.what();
    }
    const RankWitness w = x_rank(q, s.shape(), f, 2);
    if (!w.rank || *w.rank != 2) return "partition point does not have X-rank 2";
    const bool has_a = std::find(w.witnesses.begin(), w.witnesses.end(), a) != w.witnesses.end();
    const bool has_b = std::find(w.witnesses.begin(), w.witnesses.end(), b) != w.witnesses.end();
    if (!has_a || !has_b) return "a half of S is not a rank witness";
  }
  return "";
}

}  // namespace

std::vector<Shape> default_e2_shapes() {
  return {Shape({2}), Shape({3}), Shape({1, 1}), Shape({2, 1}),
          Shape({1, 1, 1}), Shape({2, 2}), Shape({1, 1, 1, 1})};
}

std::vector<Shape> default_e3_exclusion_shapes() {
  return {Shape({2, 2}), Shape({3, 1}), Shape({2, 1, 1}), Shape({1, 1, 1, 1})};
}

std::vector<Shape> default_e301_shapes() {
  return {Shape({1}), Shape({2}), Shape({3}), Shape({1, 1}), Shape({2, 1}),
          Shape({1, 1, 1})};
}

VerificationReport verify_prop_e2(const std::vector<u32>& fields,
                                  const std::vector<Shape>& shapes,
                                  const VerifyOptions& opt) {
  VerificationReport rep;
  rep.statement_id = "e2";
  rep.reduction_used = "fix_first_point";
  const auto start = Clock::now();
  Sink sink(rep, opt.max_counterexamples);
  for (u32 p : fields) {
    const FieldSpec f = FieldSpec::prime(p);
    note_field(rep, p);
    for (const Shape& shape : shapes) {
      note_shape(rep, shape);
      const bool allowed = shape == Shape({2}) || shape == Shape({1, 1});
      EnumTask task{shape, f, 4, {.nondegenerate = true, .circuit = true},
                    Reduction::kFixFirstPoint};
      task.budget = opt.budget;
      const PointTable table(shape, f);
      const EnumStats st = enumerate_parallel(task, table, opt.jobs,
          [&](const EnumHit& h, std::size_t) {
            if (!allowed) sink.counterexample(h.point_set(), "4-point nondegenerate circuit on (" +
                                                                 shape.to_string() + ")");
          });
      add_count(rep, p, shape.to_string(), "nondegenerate_circuits", st.total);
      if (shape == Shape({1, 1})) {
        // Every circuit, unreduced, so the reduced count is cross-checked too.
        EnumTask full = task;
        full.reduction = Reduction::kNone;
        std::atomic<u64> minimal{0};
        const EnumStats fs = enumerate_parallel(full, table, opt.jobs,
            [&](const EnumHit& h, std::size_t) {
              const PointSet s = h.point_set();
              const std::string why = check_e2_pair(s);
              if (!why.empty()) sink.counterexample(s, why);
              if (is_minimal(s).overall) ++minimal;
            });
        if (fs.total != st.total) {
          sink.failure("reduced count " + std::to_string(st.total) +
                       " differs from unreduced count " + std::to_string(fs.total) +
                       " on (1,1) over " + f.to_string());
        }
        add_count(rep, p, shape.to_string(), "case_b_irreducible_form", minimal.load());
        add_count(rep, p, shape.to_string(), "case_a_reducible_form",
                  fs.total - minimal.load());
      }
    }
  }
  sink.finish(start);
  return rep;
}

VerificationReport verify_thm_e3(const std::vector<u32>& exclusion_fields,
                                 std::optional<u32> positive_field,
                                 const VerifyOptions& opt) {
  VerificationReport rep;
  rep.statement_id = "e3";
  rep.reduction_used = "fix_first_point";
  const auto start = Clock::now();
  Sink sink(rep, opt.max_counterexamples);
  for (u32 p : exclusion_fields) {
    const FieldSpec f = FieldSpec::prime(p);
    note_field(rep, p);
    for (const Shape& shape : default_e3_exclusion_shapes()) {
      note_shape(rep, shape);
      EnumTask task{shape, f, 5, {.nondegenerate = true, .circuit = true},
                    Reduction::kFixFirstPoint};
      task.budget = opt.budget;
      const PointTable table(shape, f);
      const EnumStats st = enumerate_parallel(task, table, opt.jobs,
          [&](const EnumHit& h, std::size_t) {
            sink.counterexample(h.point_set(), "5-point nondegenerate circuit on (" +
                                                   shape.to_string() + ")");
          });
      add_count(rep, p, shape.to_string(), "nondegenerate_circuits", st.total);
    }
  }
  if (!positive_field) {
    sink.finish(start);
    return rep;
  }

  const u32 p = *positive_field;
  const FieldSpec f = FieldSpec::prime(p);
  if (p + 1 < 5) throw PreconditionError("the positive suite needs p + 1 >= 5");
  note_field(rep, p);
  const Shape shape({1, 1, 1});
  note_shape(rep, shape);
  const PointTable table(shape, f);

  // B_3 census, deduplicated by point set.
  std::vector<IndexMask> masks;
  std::set<std::vector<u32>> distinct;
  u64 subset_checks = 0;
  u64 subset_failures = 0;
  enumerate_b_k(f, 3, [&](const RncCurve& c) {
    std::vector<u32> idx;
    IndexMask m(table.size());
    for (const MPoint& q : curve_points(c)) {
      idx.push_back(static_cast<u32>(table.index_of(q)));
      m.set(idx.back());
    }
    std::sort(idx.begin(), idx.end());
    distinct.insert(idx);
    masks.push_back(std::move(m));
    // Every 5-subset must be a nondegenerate minimal circuit.
    std::vector<bool> sel(idx.size(), false);
    std::fill(sel.begin(), sel.begin() + 5, true);
    std::vector<u32> sub;
    do {
      sub.clear();
      for (std::size_t j = 0; j < idx.size(); ++j) {
        if (sel[j]) sub.push_back(idx[j]);
      }
      ++subset_checks;
      bool ok = fast_is_circuit(table, sub);
      for (std::size_t i = 0; ok && i < 3; ++i) {
        std::set<std::size_t> fac;
        std::set<std::size_t> eta;
        for (u32 j : sub) {
          fac.insert(table.factor_index(j, i));
          eta.insert(table.eta_key(j, i));
        }
        ok = fac.size() >= 2 && eta.size() == sub.size();
      }
      if (!ok) {
        ++subset_failures;
        sink.counterexample(table.make_set(sub), "5 points of a B_3 curve fail the circuit test");
      }
    } while (std::prev_permutation(sel.begin(), sel.end()));
  });
  add_count(rep, p, "1,1,1", "b3_curves", masks.size());
  add_count(rep, p, "1,1,1", "b3_distinct_point_sets", distinct.size());
  add_count(rep, p, "1,1,1", "curve_subset_checks", subset_checks);
  if (masks.size() != count_b_k(p, 3) || distinct.size() != masks.size()) {
    sink.failure("B_3 census: " + std::to_string(masks.size()) + " curves, " +
                 std::to_string(distinct.size()) + " distinct, expected " +
                 std::to_string(count_b_k(p, 3)));
  }

  EnumTask task{shape, f, 5, {.nondegenerate = true, .circuit = true},
                Reduction::kFixFirstPoint};
  task.budget = opt.budget;
  std::atomic<u64> minimal_reduced{0};
  const EnumStats st = enumerate_parallel(task, table, opt.jobs,
      [&](const EnumHit& h, std::size_t) {
        const PointSet s = h.point_set();
        if (!is_minimal(s).overall) {
          sink.counterexample(s, "5-point circuit of (1,1,1) is not minimal");
          return;
        }
        ++minimal_reduced;
        std::size_t containing = 0;
        for (const IndexMask& m : masks) containing += m.contains_all(h.indices);
        const std::optional<RncCurve> fit = fit_multidegree_one(s);
        if (!fit || containing != 1) {
          sink.counterexample(s, "5-point circuit lies on " + std::to_string(containing) +
                                     " B_3 curves (fit " + (fit ? "ok" : "failed") + ")");
        }
      });
  add_count(rep, p, "1,1,1", "reduced_circuits", st.emitted);
  add_count(rep, p, "1,1,1", "nondegenerate_circuits", st.total);
  const u64 expected = count_b_k(p, 3) * binom(p + 1, 5);
  // Minimality is invariant under the group action, so the incidence
  // correction applies to the minimal circuits on their own.
  const u64 minimal_total = minimal_reduced.load() * table.size() / 5;
  add_count(rep, p, "1,1,1", "minimal_reduced_circuits", minimal_reduced.load());
  add_count(rep, p, "1,1,1", "minimal_nondegenerate_circuits", minimal_total);
  add_count(rep, p, "1,1,1", "expected_curves_times_subsets", expected);
  if (st.total != expected) {
    sink.failure("circuit total " + std::to_string(st.total) + " differs from " +
                 std::to_string(expected));
  }
  if (minimal_total != expected || (minimal_reduced.load() * table.size()) % 5 != 0) {
    sink.failure("minimal circuit total " + std::to_string(minimal_total) +
                 " differs from " + std::to_string(expected));
  }
  sink.finish(start);
  return rep;
}

VerificationReport verify_prop_e301(u32 p, const std::vector<Shape>& shapes,
                                    const VerifyOptions& opt) {
  VerificationReport rep;
  rep.statement_id = "e301";
  rep.reduction_used = "fix_first_point";
  const auto start = Clock::now();
  Sink sink(rep, opt.max_counterexamples);
  const FieldSpec f = FieldSpec::prime(p);
  note_field(rep, p);
  // (e, #kernel, kernel shape) of the four admissible cases.
  const std::vector<std::tuple<long, std::size_t, std::vector<int>>> cases = {
      {3, 5, {1}}, {2, 5, {2}}, {2, 5, {1, 1}}, {2, 4, {1}}};
  std::vector<u64> realized(cases.size(), 0);
  std::mutex mu;
  for (const Shape& shape : shapes) {
    note_shape(rep, shape);
    EnumTask task{shape, f, 5, {.nondegenerate = true, .min_defect = 2},
                  Reduction::kFixFirstPoint};
    task.budget = opt.budget;
    const PointTable table(shape, f);
    std::vector<u64> local(cases.size(), 0);
    const EnumStats st = enumerate_parallel(task, table, opt.jobs,
        [&](const EnumHit& h, std::size_t) {
          const PointSet s = h.point_set();
          const EssentialPartition part = essential_partition(s);
          std::vector<int> ks;
          for (int d : minimal_subspace(part.kernel).dims) {
            if (d > 0) ks.push_back(d);
          }
          const auto key = std::make_tuple(static_cast<long>(h.e), part.kernel.size(), ks);
          const auto it = std::find(cases.begin(), cases.end(), key);
          if (it == cases.end()) {
            sink.counterexample(s, "kernel type outside the four cases");
            return;
          }
          std::lock_guard<std::mutex> lock(mu);
          ++local[static_cast<std::size_t>(it - cases.begin())];
        });
    add_count(rep, p, shape.to_string(), "sets_e_ge_2", st.total);
    for (std::size_t c = 0; c < cases.size(); ++c) {
      // Each case is a union of group orbits, so the incidence correction
      // applies per case.
      const u64 scaled = local[c] * table.size();
      if (scaled % 5 != 0) {
        sink.failure("case " + std::to_string(c + 1) + " count on (" + shape.to_string() +
                     ") is not incidence-integral");
      }
      add_count(rep, p, shape.to_string(), "case_" + std::to_string(c + 1), scaled / 5);
      realized[c] += local[c];
    }
  }
  for (std::size_t c = 0; c < cases.size(); ++c) {
    if (realized[c] == 0) sink.failure("case " + std::to_string(c + 1) + " is not realized");
  }
  sink.finish(start);
  return rep;
}

std::optional<Bound> parse_bound(const std::string& id) {
  if (id == "n3") return Bound::kN3;
  if (id == "n4a") return Bound::kN4a;
  if (id == "n4b") return Bound::kN4b;
  if (id == "n400") return Bound::kN400;
  return std::nullopt;
}

std::string to_string(Bound b) {
  switch (b) {
    case Bound::kN3: return "n3";
    case Bound::kN4a: return "n4a";
    case Bound::kN4b: return "n4b";
    case Bound::kN400: return "n400";
  }
  return "";
}

BoundParams default_bound_params(Bound b) {
  switch (b) {
    case Bound::kN3: return {2, {Shape({2, 1}), Shape({3, 1}), Shape({2, 2})}, 6, 1};
    case Bound::kN4a: return {3, {Shape({1, 1}), Shape({1, 1, 1})}, 6, 1};
    case Bound::kN4b: return {3, {Shape({1, 1}), Shape({1, 1, 1})}, 6, 1};
    case Bound::kN400: return {5, {Shape({2, 1}), Shape({1, 1, 1})}, 6, 1};
  }
  throw PreconditionError("unknown bound");
}

VerificationReport verify_bounds(Bound which, const BoundParams& params,
                                 const VerifyOptions& opt) {
  VerificationReport rep;
  rep.statement_id = to_string(which);
  rep.reduction_used = "fix_first_point";
  const auto start = Clock::now();
  Sink sink(rep, opt.max_counterexamples);
  const u32 p = params.field;
  const FieldSpec f = FieldSpec::prime(p);
  note_field(rep, p);
  for (const Shape& shape : params.shapes) {
    note_shape(rep, shape);
    const PointTable table(shape, f);
    const int k = static_cast<int>(shape.k());
    const std::string sh = shape.to_string();
    switch (which) {
      case Bound::kN3: {
        if (k < 2 || shape.n(0) != shape.m()) {
          sink.failure("shape (" + sh + ") needs k >= 2 and n_1 maximal");
          continue;
        }
        for (int s = 3; s <= params.max_cardinality; ++s) {
          EnumTask task{shape, f, s, {.nondegenerate = true, .min_defect = 1},
                        Reduction::kFixFirstPoint};
          task.budget = opt.budget;
          const EnumStats st = enumerate_parallel(task, table, opt.jobs,
              [&](const EnumHit& h, std::size_t) {
                if (h.e > s - shape.n(0) - 1) {
                  sink.counterexample(h.point_set(), "e(S) > #S - n_1 - 1");
                }
              });
          add_count(rep, p, sh, "dependent_nondegenerate_s" + std::to_string(s), st.total);
        }
        break;
      }
      case Bound::kN4a:
      case Bound::kN4b: {
        if (!shape.all_ones()) {
          sink.failure("shape (" + sh + ") is not (1,...,1)");
          continue;
        }
        std::vector<IndexMask> masks;
        if (which == Bound::kN4b) masks = curve_masks(table, shape.k());
        std::atomic<u64> on_curve{0};
        for (int s = 3; s <= params.max_cardinality; ++s) {
          EnumTask task{shape, f, s,
                        {.nondegenerate = true, .minimal = true, .min_defect = 1},
                        Reduction::kFixFirstPoint};
          task.budget = opt.budget;
          const EnumStats st = enumerate_parallel(task, table, opt.jobs,
              [&](const EnumHit& h, std::size_t) {
                if (which == Bound::kN4a) {
                  if (s < k + h.e + 1) sink.counterexample(h.point_set(), "#S < k + e + 1");
                  return;
                }
                const PointSet set = h.point_set();
                bool injective = true;
                for (std::size_t i = 0; i < shape.k(); ++i) {
                  std::set<std::size_t> fac;
                  for (u32 j : h.indices) fac.insert(table.factor_index(j, i));
                  injective = injective && fac.size() == h.indices.size();
                }
                const bool fitted = injective && fit_multidegree_one(set).has_value();
                const bool brute = std::any_of(masks.begin(), masks.end(),
                    [&](const IndexMask& m) { return m.contains_all(h.indices); });
                if (fitted != brute) {
                  sink.counterexample(set, std::string("fit ") + (fitted ? "succeeds" : "fails") +
                                               " but curve search " +
                                               (brute ? "finds" : "misses") + " a curve");
                }
                if (brute) ++on_curve;
              });
          add_count(rep, p, sh, "minimal_nondegenerate_dependent_s" + std::to_string(s),
                    st.total);
        }
        if (which == Bound::kN4b) add_count(rep, p, sh, "reduced_sets_on_a_curve", on_curve.load());
        break;
      }
      case Bound::kN400: {
        if (k < 2) {
          sink.failure("shape (" + sh + ") needs k >= 2");
          continue;
        }
        const int target = shape.m() + k + params.e;
        for (int s = 3; s < target; ++s) {
          EnumTask task{shape, f, s,
                        {.nondegenerate = true, .minimal = true,
                         .min_defect = params.e, .max_defect = params.e},
                        Reduction::kFixFirstPoint};
          task.budget = opt.budget;
          const EnumStats st = enumerate_parallel(task, table, opt.jobs,
              [&](const EnumHit& h, std::size_t) {
                sink.counterexample(h.point_set(), "minimal nondegenerate set below m + k + e");
              });
          add_count(rep, p, sh, "below_bound_s" + std::to_string(s), st.total);
        }
        Rng rng(opt.seed);
        try {
          const PointSet w = construct_extremal_n400(shape, f, params.e, rng);
          const bool ok = static_cast<int>(w.size()) == target && defect(w).e == params.e &&
                          is_minimal(w).overall && is_nondegenerate(w);
          if (!ok) sink.counterexample(w, "constructed witness misses the contract");
          add_count(rep, p, sh, "witness_size", w.size());
        } catch (const FieldTooSmall& err) {
          sink.failure(std::string("witness construction: ") + err.what());
        }
        break;
      }
    }
  }
  sink.finish(start);
  return rep;
}

}  // namespace segre
