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

// Curves h = (h_1, ..., h_k): P^1 -> Y with every h_i a rational normal
// curve, and the randomized constructions built from them.

#ifndef SEGRE_RNC_HPP_
#define SEGRE_RNC_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "segre/invariants.hpp"
#include "segre/random.hpp"

namespace segre {

// Standard Veronese map P^1 -> P^n: (s : u) -> (s^n, s^{n-1} u, ..., u^n).
Vector veronese(const ProjPoint& t, int n);

class RncCurve {
 public:
  // factor_maps[i] is an invertible (n_i + 1) x (n_i + 1) matrix G_i and
  // h_i = G_i o veronese(., n_i). Throws ShapeError / DegeneracyError.
  RncCurve(Shape shape, std::vector<Matrix> factor_maps);
  // All maps the identity.
  static RncCurve standard(const Shape& shape, const FieldSpec& field);

  const Shape& shape() const { return shape_; }
  const std::vector<Matrix>& factor_maps() const { return maps_; }
  FieldSpec field() const { return maps_.front().field(); }

  // For all-ones shapes: reparametrize so G_1 = id and normalize every map.
  // Two all-ones curves are equal as point sets iff their canonical forms
  // agree. Throws PreconditionError on other shapes.
  RncCurve canonical() const;
  bool operator==(const RncCurve& o) const;

 private:
  Shape shape_;
  std::vector<Matrix> maps_;
};

MPoint curve_point(const RncCurve& c, const ProjPoint& t);
// The p + 1 points h(t), t in P^1(F_p) ascending. Throws UnsupportedError
// over Q.
std::vector<MPoint> curve_points(const RncCurve& c);

// The all-ones curve through S, fitted by Möbius maps pi_1(S) -> pi_i(S).
// Throws PreconditionError unless the shape is all ones, #S >= 3 and every
// pi_i is injective on S.
std::optional<RncCurve> fit_multidegree_one(const PointSet& s);

// All normalized invertible 2 x 2 matrices over GF(p); p^3 - p of them.
std::vector<Matrix> pgl2_elements(const FieldSpec& field);
// (p^3 - p)^(k - 1).
std::uint64_t count_b_k(std::uint32_t p, std::size_t k);
// Calls fn on every canonical curve of B_k(F_p), in mixed-radix order over
// pgl2_elements for factors 2..k. Returns the count.
std::uint64_t enumerate_b_k(const FieldSpec& field, std::size_t k,
                            const std::function<void(const RncCurve&)>& fn);
RncCurve random_b_k(const FieldSpec& field, std::size_t k, Rng& rng);
RncCurve random_rnc(const Shape& shape, const FieldSpec& field, Rng& rng);

// A line of collinear points along factor 1 plus m = max{n_1 - 1, n_2, ...}
// further points; #S = e + 2 + m, nondegenerate, e(S) = e. Needs k >= 2.
PointSet construct_example_n2(const Shape& shape, const FieldSpec& field,
                              int e, Rng& rng);
// A minimal nondegenerate set with e(S) = e and #S = m + k + e: k + e + 1
// points of a B_k curve inside a (P^1)^k of Y plus m - 1 random points.
PointSet construct_extremal_n400(const Shape& shape, const FieldSpec& field,
                                 int e, Rng& rng);

enum class P2P1Kind { kTwistedCubic, kConicLine, kThreeLines };
std::optional<P2P1Kind> parse_p2p1_kind(const std::string& name);
std::string to_string(P2P1Kind kind);
// A 5-point nondegenerate circuit of P^2 x P^1 on a curve of the given kind.
PointSet construct_p2p1_circuit(const FieldSpec& field, P2P1Kind kind, Rng& rng);

}  // namespace segre

#endif  // SEGRE_RNC_HPP_
