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

#include "segre/xrank.hpp"

#include "segre/error.hpp"

namespace segre {

namespace {

LinearSubspace embedded_span(const PointSet& s) {
  std::vector<Vector> rows;
  for (const MPoint& p : s) rows.push_back(segre_embed(s.shape(), p));
  return LinearSubspace::span(s.field(), s.shape().ambient_size(), rows);
}

}  // namespace

RankWitness x_rank(std::span<const Scalar> q, const Shape& shape,
                   const FieldSpec& field, int cap) {
  if (!field.is_prime()) throw UnsupportedError("x_rank enumerates Y(F_p)");
  if (cap < 1) throw PreconditionError("x_rank cap must be >= 1");
  if (q.size() != shape.ambient_size()) throw ShapeError("q has the wrong length");
  if (is_zero_vector(q)) throw PreconditionError("q must be nonzero");
  RankWitness out{Vector(q.begin(), q.end()), std::nullopt, {}};

  const std::vector<MPoint> pts = rational_points(shape, field);
  std::vector<Vector> emb;
  emb.reserve(pts.size());
  for (const MPoint& p : pts) emb.push_back(segre_embed(shape, p));
  const Vector qn = normalize_leading(Vector(q.begin(), q.end()));

  for (int t = 1; t <= cap && !out.rank; ++t) {
    if (static_cast<std::size_t>(t) > pts.size()) break;
    std::vector<std::size_t> idx(t);
    for (int j = 0; j < t; ++j) idx[j] = j;
    while (true) {
      bool hit;
      if (t == 1) {
        hit = emb[idx[0]] == qn;
      } else {
        std::vector<Vector> rows;
        for (std::size_t j : idx) rows.push_back(emb[j]);
        const LinearSubspace sp = LinearSubspace::span(field, shape.ambient_size(), rows);
        hit = sp.rank() == static_cast<std::size_t>(t) && sp.contains(q);
      }
      if (hit) {
        std::vector<MPoint> sel;
        for (std::size_t j : idx) sel.push_back(pts[j]);
        out.witnesses.emplace_back(shape, field, std::move(sel));
      }
      int pos = t - 1;
      while (pos >= 0 && idx[pos] == pts.size() - t + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!out.witnesses.empty()) out.rank = t;
  }
  return out;
}

Vector circuit_partition_point(const PointSet& s, const PointSet& a) {
  if (a.empty() || a.size() >= s.size()) {
    throw PreconditionError("A must be a nonempty proper subset of S");
  }
  for (const MPoint& p : a) {
    if (!s.contains(p)) throw PreconditionError("A is not a subset of S");
  }
  const LinearSubspace meet = span_intersect(embedded_span(a), embedded_span(s.minus(a)));
  if (meet.proj_dim() != 0) {
    throw PreconditionError("spans meet in projective dimension " +
                            std::to_string(meet.proj_dim()) + ", not a point");
  }
  return normalize_leading(meet.basis().front());
}

bool irredundantly_spans(std::span<const Scalar> q, const PointSet& a) {
  if (a.empty()) return false;
  if (!embedded_span(a).contains(q)) return false;
  for (std::size_t p = 0; p < a.size(); ++p) {
    const PointSet rest = a.without(p);
    if (rest.empty()) {
      if (is_zero_vector(q)) return false;
      continue;
    }
    if (embedded_span(rest).contains(q)) return false;
  }
  return true;
}

PointSet outside_divisor(const PointSet& s, std::size_t i,
                         std::span<const Scalar> h) {
  std::vector<MPoint> out;
  for (const MPoint& p : s) {
    const Vector& x = p.factor(i).coords();
    if (x.size() != h.size()) throw ShapeError("hyperplane has the wrong length");
    Scalar v = s.field().zero();
    for (std::size_t j = 0; j < x.size(); ++j) v += h[j] * x[j];
    if (!v.is_zero()) out.push_back(p);
  }
  return PointSet(s.shape(), s.field(), std::move(out));
}

LemmaCheck check_lemma_ee0(std::span<const Scalar> q, const PointSet& a,
                           const PointSet& b, std::size_t i,
                           std::span<const Scalar> h) {
  LemmaCheck out{false, "", false, false};
  if (a.shape() != b.shape() || a.field() != b.field()) {
    out.violation = "A and B live in different spaces";
    return out;
  }
  if (i >= a.shape().k()) {
    out.violation = "factor index out of range";
    return out;
  }
  if (h.size() != static_cast<std::size_t>(a.shape().n(i) + 1) || is_zero_vector(h)) {
    out.violation = "H is not a hyperplane of factor i";
    return out;
  }
  if (a == b) {
    out.violation = "A equals B";
    return out;
  }
  if (!irredundantly_spans(q, a) || !irredundantly_spans(q, b)) {
    out.violation = "A or B does not irredundantly span q";
    return out;
  }
  out.precondition_ok = true;
  const PointSet ra = outside_divisor(a, i, h);
  const PointSet rb = outside_divisor(b, i, h);
  const PointSet z = ra.unite(rb);
  long h1 = 0;
  if (!z.empty()) {
    h1 = a.shape().k() == 1
             ? static_cast<long>(z.size()) - 1
             : defect_pattern(z, Pattern::eps_hat(a.shape().k(), i));
  }
  out.hypothesis_holds = h1 == 0;
  out.conclusion_holds = ra == rb;
  return out;
}

}  // namespace segre
