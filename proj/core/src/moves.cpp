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

#include "segre/moves.hpp"

#include <algorithm>

#include "segre/error.hpp"

namespace segre {

namespace {

// Unnormalized Kronecker product, linear in each factor.
Vector raw_embed(const MPoint& p) {
  Vector out{p.field().one()};
  for (const ProjPoint& f : p.factors()) {
    Vector next;
    next.reserve(out.size() * f.coords().size());
    for (const Scalar& x : out) {
      for (const Scalar& y : f.coords()) next.push_back(x * y);
    }
    out = std::move(next);
  }
  return out;
}

MPoint with_factor(const MPoint& p, std::size_t i, ProjPoint f) {
  std::vector<ProjPoint> factors = p.factors();
  factors[i] = std::move(f);
  return MPoint(std::move(factors));
}

std::uint32_t next_prime_at_least(std::uint64_t n) {
  while (!is_prime_number(n)) ++n;
  return static_cast<std::uint32_t>(n);
}

// Points of the line <x, w> outside `avoid`. Over Q a handful of random
// points is drawn instead.
std::vector<ProjPoint> line_candidates(const ProjPoint& x, const ProjPoint& w,
                                       const std::vector<ProjPoint>& avoid,
                                       Rng& rng) {
  const FieldSpec f = x.field();
  std::vector<ProjPoint> out;
  auto consider = [&](ProjPoint pt) {
    if (std::find(avoid.begin(), avoid.end(), pt) == avoid.end() &&
        std::find(out.begin(), out.end(), pt) == out.end()) {
      out.push_back(std::move(pt));
    }
  };
  auto point_at = [&](const Scalar& t) {
    Vector v = w.coords();
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += t * x.coords()[j];
    return ProjPoint(std::move(v));
  };
  if (f.is_prime()) {
    for (std::uint32_t t = 0; t < f.modulus(); ++t) {
      consider(point_at(Scalar::residue(t, f.modulus())));
    }
  } else {
    for (int j = 0; j < 8; ++j) consider(point_at(random_scalar(f, rng, 16)));
  }
  return out;
}

}  // namespace

IncreaseResult elementary_increase(const PointSet& s, const MPoint& o,
                                   std::size_t i, Rng& rng, int retries) {
  const Shape& shape = s.shape();
  if (i >= shape.k()) throw ShapeError("factor index out of range");
  if (!s.contains(o)) throw PreconditionError("o is not a point of S");
  if (defect(s).e != 0) {
    throw PreconditionError("elementary_increase needs an independent set");
  }
  if (s.size() >= shape.ambient_size()) {
    throw PreconditionError("S already spans the Segre ambient space");
  }
  std::vector<ProjPoint> avoid;
  for (const MPoint& p : s) avoid.push_back(p.factor(i));
  const ProjPoint& oi = o.factor(i);
  const FieldSpec f = s.field();

  auto attempt = [&](const std::vector<ProjPoint>& cand) {
    const std::size_t a = uniform_below(rng, cand.size());
    std::size_t b = uniform_below(rng, cand.size() - 1);
    if (b >= a) ++b;
    std::vector<MPoint> pts;
    for (const MPoint& p : s) {
      if (p != o) pts.push_back(p);
    }
    pts.push_back(with_factor(o, i, cand[a]));
    pts.push_back(with_factor(o, i, cand[b]));
    PointSet out(shape, f, std::move(pts));
    const bool indep = defect(out).e == 0;
    return std::make_pair(std::move(out), indep);
  };

  std::optional<PointSet> last;
  int used = 0;
  for (int t = 0; t < retries; ++t) {
    ProjPoint w = random_proj_point(f, shape.n(i), rng);
    if (w == oi) continue;
    const std::vector<ProjPoint> cand = line_candidates(oi, w, avoid, rng);
    if (cand.size() < 2) continue;
    ++used;
    auto [set, indep] = attempt(cand);
    if (indep) return {std::move(set), true, used};
    last = std::move(set);
  }
  if (last) return {std::move(*last), false, used};
  // No sampled line worked; scan every line through pi_i(o) before giving up.
  if (f.is_prime()) {
    for (const ProjPoint& w : projective_points(f, shape.n(i))) {
      if (w == oi) continue;
      const std::vector<ProjPoint> cand = line_candidates(oi, w, avoid, rng);
      if (cand.size() < 2) continue;
      auto [set, indep] = attempt(cand);
      return {std::move(set), indep, used + 1};
    }
  }
  throw FieldTooSmall("no line through pi_i(o) has two points off pi_i(S)",
                      next_prime_at_least(s.size() + 1));
}

PointSet elementary_decrease(const PointSet& s, std::span<const Scalar> q,
                             const MPoint& a, const MPoint& b, std::size_t i) {
  const Shape& shape = s.shape();
  if (i >= shape.k()) throw ShapeError("factor index out of range");
  if (!s.contains(a) || !s.contains(b) || a == b) {
    throw PreconditionError("a and b must be distinct points of S");
  }
  if (!a.same_fiber(b, i)) {
    throw PreconditionError("a and b differ outside factor " + std::to_string(i));
  }
  if (q.size() != shape.ambient_size()) throw ShapeError("q has the wrong length");
  const Matrix emb = embedding_matrix(s);
  const LinearSubspace full =
      LinearSubspace::span(s.field(), shape.ambient_size(), emb.row_vectors());
  if (!full.contains(q)) throw PreconditionError("q is not in the span of nu(S)");

  std::vector<MPoint> rest_pts;
  for (const MPoint& p : s) {
    if (p != a && p != b) rest_pts.push_back(p);
  }
  PointSet rest(shape, s.field(), rest_pts);
  std::vector<Vector> rest_rows;
  for (const MPoint& p : rest) rest_rows.push_back(segre_embed(shape, p));
  if (LinearSubspace::span(s.field(), shape.ambient_size(), rest_rows).contains(q)) {
    return rest;
  }
  // Columns [a, b, rest...]; nu is linear in factor i on the fiber of a.
  std::vector<Vector> cols{raw_embed(a), raw_embed(b)};
  for (Vector& r : rest_rows) cols.push_back(std::move(r));
  const Matrix m = Matrix::from_rows(s.field(), cols).transpose();
  const std::optional<Vector> x = solve(m, q);
  if (!x) throw Error("q left the span during elementary_decrease");
  Vector oi = zero_vector(s.field(), a.factor(i).coords().size());
  for (std::size_t j = 0; j < oi.size(); ++j) {
    oi[j] = (*x)[0] * a.factor(i).coords()[j] + (*x)[1] * b.factor(i).coords()[j];
  }
  MPoint o = with_factor(a, i, ProjPoint(std::move(oi)));
  if (!rest.contains(o)) rest_pts.push_back(std::move(o));
  return PointSet(shape, s.field(), std::move(rest_pts));
}

ProjectionResult linear_project(const PointSet& s, std::size_t i,
                                const LinearSubspace& center) {
  const Shape& shape = s.shape();
  if (i >= shape.k()) throw ShapeError("factor index out of range");
  const auto ni = static_cast<std::size_t>(shape.n(i));
  if (center.ambient() != ni + 1) throw ShapeError("center lives in another space");
  if (center.proj_dim() < 0 || center.proj_dim() > static_cast<long>(ni) - 2) {
    throw PreconditionError("center must satisfy 0 <= dim V <= n_i - 2");
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c <= ni; ++c) {
    if (std::find(center.pivots().begin(), center.pivots().end(), c) ==
        center.pivots().end()) {
      keep.push_back(c);
    }
  }
  std::vector<int> dims = shape.dims();
  dims[i] = static_cast<int>(keep.size()) - 1;
  std::vector<MPoint> image;
  for (const MPoint& p : s) {
    const Vector r = center.reduce(p.factor(i).coords());
    if (is_zero_vector(r)) {
      throw PreconditionError("center contains pi_i of " + p.to_string());
    }
    Vector v;
    for (std::size_t c : keep) v.push_back(r[c]);
    image.push_back(with_factor(p, i, ProjPoint(std::move(v))));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const bool injective = image.size() == s.size();
  return {PointSet(Shape(std::move(dims)), s.field(), std::move(image)), injective};
}

}  // namespace segre
