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

#include "segre/rnc.hpp"

#include <algorithm>

#include "segre/error.hpp"

namespace segre {

namespace {

constexpr int kConstructRetries = 256;

std::uint32_t next_prime_at_least(std::uint64_t n) {
  while (!is_prime_number(n)) ++n;
  return static_cast<std::uint32_t>(n);
}

// Smallest prime p with p + 1 >= points.
std::uint32_t prime_for_points(std::uint64_t points) {
  return next_prime_at_least(points > 3 ? points - 1 : 2);
}

// `count` distinct points of P^1 outside `exclude`, in random order.
std::vector<ProjPoint> distinct_params(const FieldSpec& f, std::size_t count,
                                       const std::vector<ProjPoint>& exclude,
                                       Rng& rng) {
  std::vector<ProjPoint> out;
  if (f.is_prime()) {
    std::vector<ProjPoint> pool;
    for (ProjPoint& t : projective_points(f, 1)) {
      if (std::find(exclude.begin(), exclude.end(), t) == exclude.end()) {
        pool.push_back(std::move(t));
      }
    }
    if (pool.size() < count) {
      throw FieldTooSmall("need " + std::to_string(count) +
                              " free points on a line over " + f.to_string(),
                          prime_for_points(count + exclude.size()));
    }
    for (std::size_t j = 0; j < count; ++j) {
      std::swap(pool[j], pool[j + uniform_below(rng, pool.size() - j)]);
      out.push_back(pool[j]);
    }
    return out;
  }
  while (out.size() < count) {
    ProjPoint t = random_proj_point(f, 1, rng, 8);
    if (std::find(exclude.begin(), exclude.end(), t) == exclude.end() &&
        std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Columns x and w, a map P^1 -> line <x, w>.
Matrix line_frame(const Vector& x, const Vector& w) {
  Matrix m(x.front().field(), x.size(), 2);
  for (std::size_t r = 0; r < x.size(); ++r) {
    m(r, 0) = x[r];
    m(r, 1) = w[r];
  }
  return m;
}

// A random (n+1) x 2 matrix of rank 2.
Matrix random_line_frame(const FieldSpec& f, int n, Rng& rng) {
  while (true) {
    const ProjPoint a = random_proj_point(f, n, rng);
    const ProjPoint b = random_proj_point(f, n, rng);
    if (a != b) return line_frame(a.coords(), b.coords());
  }
}

ProjPoint image(const Matrix& m, const ProjPoint& t) { return apply(m, t); }

MPoint make_point(std::vector<ProjPoint> f) { return MPoint(std::move(f)); }

}  // namespace

Vector veronese(const ProjPoint& t, int n) {
  if (t.ambient_dim() != 1) throw ShapeError("veronese needs a point of P^1");
  const Scalar& s = t.coords()[0];
  const Scalar& u = t.coords()[1];
  const FieldSpec f = s.field();
  Vector out;
  out.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    Scalar v = f.one();
    for (int a = 0; a < n - j; ++a) v *= s;
    for (int b = 0; b < j; ++b) v *= u;
    out.push_back(std::move(v));
  }
  return out;
}

RncCurve::RncCurve(Shape shape, std::vector<Matrix> factor_maps)
    : shape_(std::move(shape)), maps_(std::move(factor_maps)) {
  if (maps_.size() != shape_.k()) throw ShapeError("one map per factor required");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto d = static_cast<std::size_t>(shape_.n(i) + 1);
    if (maps_[i].rows() != d || maps_[i].cols() != d) {
      throw ShapeError("factor map " + std::to_string(i) + " must be " +
                       std::to_string(d) + "x" + std::to_string(d));
    }
    if (maps_[i].field() != maps_.front().field()) {
      throw FieldMismatch("factor maps over different fields");
    }
    if (determinant(maps_[i]).is_zero()) {
      throw DegeneracyError("factor map " + std::to_string(i) + " is singular");
    }
    maps_[i] = normalize_projective(std::move(maps_[i]));
  }
}

RncCurve RncCurve::standard(const Shape& shape, const FieldSpec& field) {
  std::vector<Matrix> maps;
  for (int n : shape.dims()) maps.push_back(Matrix::identity(field, n + 1));
  return RncCurve(shape, std::move(maps));
}

RncCurve RncCurve::canonical() const {
  if (!shape_.all_ones()) {
    throw PreconditionError("canonical form exists for all-ones shapes only");
  }
  const Matrix g1inv = *inverse(maps_.front());
  std::vector<Matrix> maps;
  for (const Matrix& g : maps_) maps.push_back(g * g1inv);
  return RncCurve(shape_, std::move(maps));
}

bool RncCurve::operator==(const RncCurve& o) const {
  return shape_ == o.shape_ && maps_ == o.maps_;
}

MPoint curve_point(const RncCurve& c, const ProjPoint& t) {
  std::vector<ProjPoint> f;
  for (std::size_t i = 0; i < c.shape().k(); ++i) {
    f.emplace_back(c.factor_maps()[i] * veronese(t, c.shape().n(i)));
  }
  return MPoint(std::move(f));
}

std::vector<MPoint> curve_points(const RncCurve& c) {
  std::vector<MPoint> out;
  for (const ProjPoint& t : projective_points(c.field(), 1)) {
    out.push_back(curve_point(c, t));
  }
  return out;
}

std::optional<RncCurve> fit_multidegree_one(const PointSet& s) {
  const Shape& shape = s.shape();
  if (!shape.all_ones()) {
    throw PreconditionError("curve fitting needs a shape (1,...,1), got (" +
                            shape.to_string() + ")");
  }
  if (s.size() < 3) throw PreconditionError("curve fitting needs at least 3 points");
  std::vector<std::vector<ProjPoint>> proj(shape.k());
  for (std::size_t i = 0; i < shape.k(); ++i) {
    for (const MPoint& p : s) proj[i].push_back(p.factor(i));
    std::vector<ProjPoint> sorted = proj[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("pi_" + std::to_string(i + 1) +
                              " is not injective on S");
    }
  }
  std::vector<Matrix> maps{Matrix::identity(s.field(), 2)};
  for (std::size_t i = 1; i < shape.k(); ++i) {
    std::optional<Matrix> m = projectively_equivalent(proj[0], proj[i]);
    if (!m) return std::nullopt;
    maps.push_back(std::move(*m));
  }
  RncCurve c(shape, std::move(maps));
  for (const MPoint& p : s) {
    if (curve_point(c, p.factor(0)) != p) throw Error("fitted curve misses a point");
  }
  return c;
}

std::vector<Matrix> pgl2_elements(const FieldSpec& field) {
  if (!field.is_prime()) throw UnsupportedError("PGL_2 enumeration needs GF(p)");
  const std::uint32_t p = field.modulus();
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(p) * p * p);
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      for (std::uint32_t c = 0; c < p; ++c) {
        for (std::uint32_t d = 0; d < p; ++d) {
          // Normalized: the first nonzero of (a, b, c, d) equals 1.
          const std::uint32_t lead = a ? a : b ? b : c ? c : d;
          if (lead != 1) continue;
          Matrix m = Matrix::from_rows(
              field, {{Scalar::residue(a, p), Scalar::residue(b, p)},
                      {Scalar::residue(c, p), Scalar::residue(d, p)}});
          if (!determinant(m).is_zero()) out.push_back(std::move(m));
        }
      }
    }
  }
  return out;
}

std::uint64_t count_b_k(std::uint32_t p, std::size_t k) {
  const std::uint64_t g = static_cast<std::uint64_t>(p) * p * p - p;
  std::uint64_t out = 1;
  for (std::size_t i = 1; i < k; ++i) out *= g;
  return out;
}

std::uint64_t enumerate_b_k(const FieldSpec& field, std::size_t k,
                            const std::function<void(const RncCurve&)>& fn) {
  if (k < 1) throw ShapeError("k must be >= 1");
  const std::vector<Matrix> group = pgl2_elements(field);
  const Shape shape(std::vector<int>(k, 1));
  std::vector<std::size_t> idx(k - 1, 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<Matrix> maps{Matrix::identity(field, 2)};
    for (std::size_t j : idx) maps.push_back(group[j]);
    fn(RncCurve(shape, std::move(maps)));
    ++count;
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < group.size()) break;
      idx[pos] = 0;
      if (pos == 0) return count;
    }
    if (idx.empty()) return count;
  }
}

RncCurve random_b_k(const FieldSpec& field, std::size_t k, Rng& rng) {
  std::vector<Matrix> maps{Matrix::identity(field, 2)};
  for (std::size_t i = 1; i < k; ++i) maps.push_back(random_invertible(field, 2, rng));
  return RncCurve(Shape(std::vector<int>(k, 1)), std::move(maps));
}

RncCurve random_rnc(const Shape& shape, const FieldSpec& field, Rng& rng) {
  std::vector<Matrix> maps;
  for (int n : shape.dims()) {
    maps.push_back(random_invertible(field, static_cast<std::size_t>(n + 1), rng));
  }
  return RncCurve(shape, std::move(maps));
}

PointSet construct_example_n2(const Shape& shape, const FieldSpec& field,
                              int e, Rng& rng) {
  if (shape.k() < 2) throw PreconditionError("construction needs k >= 2");
  if (e < 1) throw PreconditionError("construction needs e >= 1");
  const std::size_t k = shape.k();
  int m = shape.n(0) - 1;
  for (std::size_t h = 1; h < k; ++h) m = std::max(m, shape.n(h));
  const auto collinear = static_cast<std::size_t>(e + 2);
  if (field.is_prime() && field.modulus() + 1u < collinear) {
    throw FieldTooSmall(std::to_string(collinear) + " distinct points on a line",
                        prime_for_points(collinear));
  }
  for (int attempt = 0; attempt < kConstructRetries; ++attempt) {
    const Matrix line = random_line_frame(field, shape.n(0), rng);
    std::vector<ProjPoint> o;
    for (std::size_t h = 1; h < k; ++h) o.push_back(random_proj_point(field, shape.n(h), rng));
    std::vector<MPoint> pts;
    for (const ProjPoint& t : distinct_params(field, collinear, {}, rng)) {
      std::vector<ProjPoint> f{image(line, t)};
      f.insert(f.end(), o.begin(), o.end());
      pts.push_back(make_point(std::move(f)));
    }
    for (int j = 0; j < m; ++j) pts.push_back(random_mpoint(shape, field, rng));
    std::vector<MPoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    PointSet s(shape, field, std::move(pts));
    if (defect(s).e != e || !is_nondegenerate(s)) continue;
    return s;
  }
  throw FieldTooSmall("no valid configuration found over " + field.to_string(),
                      next_prime_at_least(field.modulus() + 1));
}

PointSet construct_extremal_n400(const Shape& shape, const FieldSpec& field,
                                 int e, Rng& rng) {
  if (shape.k() < 2) throw PreconditionError("construction needs k >= 2");
  if (e < 1) throw PreconditionError("construction needs e >= 1");
  const std::size_t k = shape.k();
  const int m = shape.m();
  const std::size_t on_curve = k + static_cast<std::size_t>(e) + 1;
  if (field.is_prime() && field.modulus() + 1u < on_curve) {
    throw FieldTooSmall(std::to_string(on_curve) + " points on a B_k curve",
                        prime_for_points(on_curve));
  }
  for (int attempt = 0; attempt < kConstructRetries; ++attempt) {
    std::vector<Matrix> frames;
    for (int n : shape.dims()) frames.push_back(random_line_frame(field, n, rng));
    const RncCurve c = random_b_k(field, k, rng);
    std::vector<MPoint> pts;
    for (const ProjPoint& t : distinct_params(field, on_curve, {}, rng)) {
      const MPoint q = curve_point(c, t);
      std::vector<ProjPoint> f;
      for (std::size_t i = 0; i < k; ++i) f.push_back(image(frames[i], q.factor(i)));
      pts.push_back(make_point(std::move(f)));
    }
    for (int j = 0; j + 1 < m; ++j) pts.push_back(random_mpoint(shape, field, rng));
    std::vector<MPoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    PointSet s(shape, field, std::move(pts));
    if (defect(s).e != e || !is_minimal(s).overall || !is_nondegenerate(s)) continue;
    return s;
  }
  throw FieldTooSmall("no minimal nondegenerate set found over " + field.to_string(),
                      next_prime_at_least(field.modulus() + 1));
}

std::optional<P2P1Kind> parse_p2p1_kind(const std::string& name) {
  if (name == "twisted_cubic") return P2P1Kind::kTwistedCubic;
  if (name == "conic_line") return P2P1Kind::kConicLine;
  if (name == "three_lines") return P2P1Kind::kThreeLines;
  return std::nullopt;
}

std::string to_string(P2P1Kind kind) {
  switch (kind) {
    case P2P1Kind::kTwistedCubic: return "twisted_cubic";
    case P2P1Kind::kConicLine: return "conic_line";
    case P2P1Kind::kThreeLines: return "three_lines";
  }
  return "";
}

namespace {

std::vector<MPoint> twisted_cubic_points(const FieldSpec& f, Rng& rng) {
  const RncCurve c = random_rnc(Shape({2, 1}), f, rng);
  std::vector<MPoint> pts;
  for (const ProjPoint& t : distinct_params(f, 5, {}, rng)) pts.push_back(curve_point(c, t));
  return pts;
}

std::vector<MPoint> conic_line_points(const FieldSpec& f, Rng& rng) {
  std::vector<MPoint> pts;
  if (uniform_below(rng, 2) == 0) {
    // Conic Q x {b} and the line {x} x P^1, meeting at (x, b).
    const Matrix g = random_invertible(f, 3, rng);
    const Matrix fiber = random_invertible(f, 2, rng);
    const std::vector<ProjPoint> node = distinct_params(f, 1, {}, rng);
    const std::vector<ProjPoint> node2 = distinct_params(f, 1, {}, rng);
    const ProjPoint x(g * veronese(node[0], 2));
    const ProjPoint b = image(fiber, node2[0]);
    for (const ProjPoint& t : distinct_params(f, 3, node, rng)) {
      pts.push_back(make_point({ProjPoint(g * veronese(t, 2)), b}));
    }
    for (const ProjPoint& t : distinct_params(f, 2, node2, rng)) {
      pts.push_back(make_point({x, image(fiber, t)}));
    }
    return pts;
  }
  // Graph of a Möbius map over a line l, and l' x {phi(x0)}, x0 in l n l'.
  const Matrix l = random_line_frame(f, 2, rng);
  const Matrix phi = random_invertible(f, 2, rng);
  const std::vector<ProjPoint> node = distinct_params(f, 1, {}, rng);
  const ProjPoint x0 = image(l, node[0]);
  ProjPoint w = random_proj_point(f, 2, rng);
  while (LinearSubspace::span(f, 3, {l.column(0), l.column(1)}).contains(w.coords())) {
    w = random_proj_point(f, 2, rng);
  }
  const Matrix l2 = line_frame(x0.coords(), w.coords());
  const ProjPoint b = image(phi, node[0]);
  for (const ProjPoint& t : distinct_params(f, 3, node, rng)) {
    pts.push_back(make_point({image(l, t), image(phi, t)}));
  }
  // Parameter (1:0) of l2 is x0 itself.
  for (const ProjPoint& t : distinct_params(f, 2, {ProjPoint::infinity(f)}, rng)) {
    pts.push_back(make_point({image(l2, t), b}));
  }
  return pts;
}

std::vector<MPoint> three_lines_points(const FieldSpec& f, Rng& rng) {
  // l1 x {b1}, {x} x P^1, l2 x {b2} with x = l1 n l2 and b1 != b2.
  const ProjPoint x = random_proj_point(f, 2, rng);
  ProjPoint w1 = random_proj_point(f, 2, rng);
  while (w1 == x) w1 = random_proj_point(f, 2, rng);
  ProjPoint w2 = random_proj_point(f, 2, rng);
  while (LinearSubspace::span(f, 3, {x.coords(), w1.coords()}).contains(w2.coords())) {
    w2 = random_proj_point(f, 2, rng);
  }
  const Matrix l1 = line_frame(x.coords(), w1.coords());
  const Matrix l2 = line_frame(x.coords(), w2.coords());
  const std::vector<ProjPoint> bs = distinct_params(f, 3, {}, rng);
  const ProjPoint inf = ProjPoint::infinity(f);
  std::vector<MPoint> pts;
  for (const ProjPoint& t : distinct_params(f, 2, {inf}, rng)) {
    pts.push_back(make_point({image(l1, t), bs[0]}));
  }
  for (const ProjPoint& t : distinct_params(f, 2, {inf}, rng)) {
    pts.push_back(make_point({image(l2, t), bs[1]}));
  }
  pts.push_back(make_point({x, bs[2]}));
  return pts;
}

}  // namespace

PointSet construct_p2p1_circuit(const FieldSpec& field, P2P1Kind kind, Rng& rng) {
  if (kind == P2P1Kind::kTwistedCubic && field.is_prime() && field.modulus() < 5) {
    throw FieldTooSmall("a twisted cubic needs 5 distinct parameters", 5);
  }
  if (kind == P2P1Kind::kConicLine && field.is_prime() && field.modulus() < 3) {
    throw FieldTooSmall("3 conic points off the node need p + 1 >= 4", 3);
  }
  const Shape shape({2, 1});
  for (int attempt = 0; attempt < kConstructRetries; ++attempt) {
    std::vector<MPoint> pts;
    switch (kind) {
      case P2P1Kind::kTwistedCubic: pts = twisted_cubic_points(field, rng); break;
      case P2P1Kind::kConicLine: pts = conic_line_points(field, rng); break;
      case P2P1Kind::kThreeLines: pts = three_lines_points(field, rng); break;
    }
    PointSet s(shape, field, std::move(pts));
    if (is_circuit(s) && is_nondegenerate(s)) return s;
  }
  throw FieldTooSmall("no " + to_string(kind) + " circuit found over " +
                          field.to_string(),
                      next_prime_at_least(field.modulus() + 1));
}

}  // namespace segre
