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

#include "segre/invariants.hpp"

#include <algorithm>

#include "segre/error.hpp"

namespace segre {

namespace {

Vector kron(const Vector& a, const Vector& b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const Scalar& x : a) {
    for (const Scalar& y : b) out.push_back(x * y);
  }
  return out;
}

void require_nonempty(const PointSet& s, const char* op) {
  if (s.empty()) throw PreconditionError(std::string(op) + " of the empty set");
}

std::size_t set_rank(const PointSet& s) { return rank(embedding_matrix(s)); }

}  // namespace

Vector segre_embed(const Shape& shape, const MPoint& p) {
  if (!p.fits(shape)) {
    throw ShapeError("point " + p.to_string() + " does not fit shape (" +
                     shape.to_string() + ")");
  }
  return embed_pattern(p, Pattern::all_ones(shape.k()));
}

Vector embed_pattern(const MPoint& p, const Pattern& a) {
  if (a.k() != p.k()) throw ShapeError("pattern length differs from k");
  Vector out{p.field().one()};
  for (std::size_t i = 0; i < p.k(); ++i) {
    if (a[i]) out = kron(out, p.factor(i).coords());
  }
  return normalize_leading(std::move(out));
}

Matrix embedding_matrix(const PointSet& s) {
  return pattern_matrix(s, Pattern::all_ones(s.shape().k()));
}

Matrix pattern_matrix(const PointSet& s, const Pattern& a) {
  if (a.k() != s.shape().k()) throw ShapeError("pattern length differs from k");
  std::size_t cols = 1;
  for (std::size_t i = 0; i < a.k(); ++i) {
    if (a[i]) cols *= static_cast<std::size_t>(s.shape().n(i) + 1);
  }
  Matrix m(s.field(), s.size(), cols);
  for (std::size_t r = 0; r < s.size(); ++r) {
    const Vector v = embed_pattern(s[r], a);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[c];
  }
  return m;
}

Defect defect(const PointSet& s) {
  require_nonempty(s, "defect");
  const auto rk = static_cast<long>(set_rank(s));
  return Defect{rk - 1, static_cast<long>(s.size()) - rk};
}

long defect_pattern(const PointSet& s, const Pattern& a) {
  require_nonempty(s, "defect_pattern");
  return static_cast<long>(s.size()) -
         static_cast<long>(rank(pattern_matrix(s, a)));
}

PointSet forget_factor(const PointSet& s, std::size_t i) {
  const Shape& shape = s.shape();
  if (shape.k() < 2) throw ShapeError("cannot forget the only factor");
  if (i >= shape.k()) throw ShapeError("factor index out of range");
  std::vector<int> dims;
  for (std::size_t j = 0; j < shape.k(); ++j) {
    if (j != i) dims.push_back(shape.n(j));
  }
  std::vector<MPoint> image;
  for (const MPoint& p : s) {
    std::vector<ProjPoint> f;
    for (std::size_t j = 0; j < shape.k(); ++j) {
      if (j != i) f.push_back(p.factor(j));
    }
    image.emplace_back(std::move(f));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return PointSet(Shape(std::move(dims)), s.field(), std::move(image));
}

MinimalSubspace minimal_subspace(const PointSet& s) {
  require_nonempty(s, "minimal_subspace");
  const Shape& shape = s.shape();
  MinimalSubspace out;
  std::vector<int> kept;
  for (std::size_t i = 0; i < shape.k(); ++i) {
    std::vector<Vector> gens;
    for (const MPoint& p : s) gens.push_back(p.factor(i).coords());
    LinearSubspace frame = LinearSubspace::span(
        s.field(), static_cast<std::size_t>(shape.n(i) + 1), gens);
    const int d = static_cast<int>(frame.proj_dim());
    out.dims.push_back(d);
    if (d > 0) kept.push_back(d);
    out.frames.push_back(std::move(frame));
  }
  if (kept.empty()) return out;
  std::vector<MPoint> pts;
  for (const MPoint& p : s) {
    std::vector<ProjPoint> f;
    for (std::size_t i = 0; i < shape.k(); ++i) {
      if (out.dims[i] == 0) continue;
      f.emplace_back(*out.frames[i].coordinates(p.factor(i).coords()));
    }
    pts.emplace_back(std::move(f));
  }
  out.reduced.emplace(Shape(std::move(kept)), s.field(), std::move(pts));
  return out;
}

bool is_nondegenerate(const PointSet& s) {
  return minimal_subspace(s).dims == s.shape().dims();
}

Minimality is_minimal(const PointSet& s) {
  const std::size_t k = s.shape().k();
  Minimality out{true, std::vector<bool>(k, true)};
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      for (std::size_t i = 0; i < k; ++i) {
        if (s[a].same_fiber(s[b], i)) out.per_factor[i] = false;
      }
    }
  }
  out.overall = std::all_of(out.per_factor.begin(), out.per_factor.end(),
                            [](bool b) { return b; });
  return out;
}

bool is_circuit(const PointSet& s) {
  if (s.size() < 2) return false;
  const std::size_t rk = set_rank(s);
  if (s.size() - rk != 1) return false;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (set_rank(s.without(p)) != rk) return false;
  }
  return true;
}

namespace {

std::vector<bool> essential_flags(const PointSet& s, std::size_t rk) {
  std::vector<bool> flags(s.size(), false);
  if (s.size() == rk) return flags;
  for (std::size_t p = 0; p < s.size(); ++p) {
    flags[p] = set_rank(s.without(p)) == rk;
  }
  return flags;
}

EssentialPartition split(const PointSet& s, const std::vector<bool>& flags) {
  std::vector<MPoint> kernel;
  std::vector<MPoint> tail;
  for (std::size_t p = 0; p < s.size(); ++p) {
    (flags[p] ? kernel : tail).push_back(s[p]);
  }
  return {PointSet(s.shape(), s.field(), std::move(kernel)),
          PointSet(s.shape(), s.field(), std::move(tail))};
}

bool strongly_essential(const PointSet& s, std::size_t e) {
  const std::size_t take = s.size() - e;
  if (take == 0) return true;
  std::vector<bool> sel(s.size(), false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(take), true);
  std::vector<std::size_t> idx;
  do {
    idx.clear();
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (sel[p]) idx.push_back(p);
    }
    if (set_rank(s.subset(idx)) != take) return false;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return true;
}

}  // namespace

EssentialPartition essential_partition(const PointSet& s) {
  require_nonempty(s, "essential_partition");
  const std::size_t rk = set_rank(s);
  const std::size_t e = s.size() - rk;
  if (e == 0) throw PreconditionError("essential_partition of an independent set");
  EssentialPartition out = split(s, essential_flags(s, rk));
  if (out.kernel.size() - set_rank(out.kernel) != e) {
    throw Error("kernel defect differs from e(S)");
  }
  return out;
}

bool is_strongly_essential(const PointSet& s) {
  require_nonempty(s, "is_strongly_essential");
  const std::size_t e = s.size() - set_rank(s);
  if (e == 0) {
    throw PreconditionError("is_strongly_essential of an independent set");
  }
  return strongly_essential(s, e);
}

DefectReport analyze(const PointSet& s) {
  require_nonempty(s, "analyze");
  const std::size_t rk = set_rank(s);
  const std::size_t e = s.size() - rk;
  std::vector<bool> flags = essential_flags(s, rk);
  EssentialPartition part = split(s, flags);
  if (e > 0 && part.kernel.size() - set_rank(part.kernel) != e) {
    throw Error("kernel defect differs from e(S)");
  }
  const Minimality mini = is_minimal(s);
  const MinimalSubspace sub = minimal_subspace(s);
  const bool circuit =
      e == 1 && std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
  return DefectReport{
      .span_dim = static_cast<long>(rk) - 1,
      .defect_e = static_cast<long>(e),
      .kernel = std::move(part.kernel),
      .tail = std::move(part.tail),
      .essential_flags = std::move(flags),
      .minimal = mini.overall,
      .i_minimal = mini.per_factor,
      .minimal_subspace_dims = sub.dims,
      .nondegenerate = sub.dims == s.shape().dims(),
      .circuit = circuit,
      .strongly_essential = e > 0 && strongly_essential(s, e),
  };
}

}  // namespace segre
