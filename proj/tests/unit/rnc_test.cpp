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


#include <gtest/gtest.h>

#include <set>

#include "segre/error.hpp"
#include "segre/rnc.hpp"
#include "test_util.hpp"

namespace segre {
namespace {

using test::gf;
using test::mp;
using test::pp;
using test::ps;

// Cross-ratio (a, b; c, inf) = (c - a) / (c - b) mod p, by hand.
long long cross_ratio_inf(long long a, long long b, long long c, long long p) {
  auto md = [p](long long x) { return ((x % p) + p) % p; };
  long long inv = 1;
  for (long long e = p - 2, x = md(c - b); e > 0; e >>= 1, x = x * x % p) {
    if (e & 1) inv = inv * x % p;
  }
  return md(c - a) * inv % p;
}

TEST(Curve, PointExamples) {
  const FieldSpec f = gf(5);
  const RncCurve diag = RncCurve::standard(Shape({1, 1, 1}), f);
  EXPECT_EQ(curve_point(diag, pp(f, {2, 1})), mp(f, {{2, 1}, {2, 1}, {2, 1}}));
  const RncCurve conic = RncCurve::standard(Shape({2}), f);
  EXPECT_EQ(curve_point(conic, pp(f, {1, 1})), mp(f, {{1, 1, 1}}));
  // (t : u) -> (t^2 : tu : u^2)
  EXPECT_EQ(curve_point(conic, pp(f, {2, 1})), mp(f, {{4, 2, 1}}));
}

TEST(Curve, SampledDefectFollowsDegree) {
  Rng rng(21);
  const FieldSpec f = gf(11);
  for (const Shape& shape : {Shape({1, 1, 1}), Shape({2, 1}), Shape({1}), Shape({3})}) {
    for (int trial = 0; trial < 20; ++trial) {
      const RncCurve c = random_rnc(shape, f, rng);
      std::vector<MPoint> pts = curve_points(c);
      ASSERT_EQ(pts.size(), 12u);
      pts.erase(pts.begin() + 5, pts.end());
      const PointSet s(shape, f, pts);
      const long expect = std::max<long>(0, 5 - shape.dim_sum() - 1);
      EXPECT_EQ(test::oracle_defect(s), expect);
      EXPECT_EQ(defect(s).e, expect);
      if (shape.k() > 1) {
        EXPECT_TRUE(is_minimal(s).overall);
      }
    }
  }
}

TEST(Fit, DiagonalGivesIdentity) {
  const auto c = fit_multidegree_one(test::diagonal5());
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, RncCurve::standard(Shape({1, 1, 1}), gf(5)));
}

TEST(Fit, CrossRatioMismatch) {
  const FieldSpec f = gf(7);
  // Factors 1 and 2 carry 0, 1, inf, 2; factor 3 carries 0, 1, inf, 3.
  const PointSet s = ps(f, {1, 1, 1}, {mp(f, {{0, 1}, {0, 1}, {0, 1}}),
                                       mp(f, {{1, 1}, {1, 1}, {1, 1}}),
                                       mp(f, {{1, 0}, {1, 0}, {1, 0}}),
                                       mp(f, {{2, 1}, {2, 1}, {3, 1}})});
  EXPECT_NE(cross_ratio_inf(0, 1, 2, 7), cross_ratio_inf(0, 1, 3, 7));
  EXPECT_FALSE(fit_multidegree_one(s));
}

TEST(Fit, Preconditions) {
  const FieldSpec f = gf(5);
  const PointSet mixed = ps(f, {2, 1}, {mp(f, {{1, 0, 0}, {0, 1}}), mp(f, {{0, 1, 0}, {1, 0}}),
                                        mp(f, {{0, 0, 1}, {1, 1}})});
  EXPECT_THROW(fit_multidegree_one(mixed), PreconditionError);
  const PointSet two = ps(f, {1, 1}, {mp(f, {{0, 1}, {0, 1}}), mp(f, {{1, 0}, {1, 0}})});
  EXPECT_THROW(fit_multidegree_one(two), PreconditionError);
  const PointSet clash = ps(f, {1, 1}, {mp(f, {{0, 1}, {0, 1}}), mp(f, {{0, 1}, {1, 0}}),
                                        mp(f, {{1, 0}, {1, 1}})});
  EXPECT_THROW(fit_multidegree_one(clash), PreconditionError);
}

TEST(Fit, RecoversSampledCurves) {
  Rng rng(5);
  const FieldSpec f = gf(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + uniform_below(rng, 3);
    const RncCurve c = random_b_k(f, k, rng);
    std::vector<MPoint> pts = curve_points(c);
    pts.erase(pts.begin() + static_cast<long>(3 + uniform_below(rng, 6)), pts.end());
    const auto fit = fit_multidegree_one(PointSet(c.shape(), f, pts));
    ASSERT_TRUE(fit);
    ASSERT_EQ(*fit, c.canonical());
  }
}

TEST(Bk, Counts) {
  EXPECT_EQ(count_b_k(5, 1), 1u);
  EXPECT_EQ(count_b_k(2, 2), 6u);
  EXPECT_EQ(count_b_k(5, 3), 14400u);
  EXPECT_EQ(pgl2_elements(gf(5)).size(), 120u);
}

// Emits every curve and checks the point sets are pairwise distinct.
std::size_t distinct_curves(std::uint32_t p, std::size_t k) {
  std::set<std::vector<MPoint>> seen;
  std::size_t emitted = 0;
  enumerate_b_k(gf(p), k, [&](const RncCurve& c) {
    std::vector<MPoint> pts = curve_points(c);
    EXPECT_EQ(pts.size(), p + 1);
    for (std::size_t i = 0; i < k; ++i) {
      std::set<ProjPoint> proj;
      for (const MPoint& q : pts) proj.insert(q.factor(i));
      EXPECT_EQ(proj.size(), p + 1);
    }
    std::sort(pts.begin(), pts.end());
    seen.insert(pts);
    ++emitted;
  });
  EXPECT_EQ(emitted, seen.size());
  return seen.size();
}

TEST(Bk, EnumerationIsDistinct) {
  EXPECT_EQ(distinct_curves(5, 1), 1u);
  EXPECT_EQ(distinct_curves(2, 2), 6u);
  EXPECT_EQ(distinct_curves(3, 2), 24u);
  EXPECT_EQ(distinct_curves(5, 3), 14400u);
}

TEST(Bk, SpanOfTwistedCubicIsThreeDimensional) {
  Rng rng(3);
  const FieldSpec f = gf(7);
  for (int trial = 0; trial < 20; ++trial) {
    const RncCurve c = random_b_k(f, 3, rng);
    const PointSet s(c.shape(), f, curve_points(c));
    EXPECT_EQ(defect(s).span_dim, 3);
  }
}

TEST(Construct, ExampleN2) {
  Rng rng(7);
  const PointSet a = construct_example_n2(Shape({1, 1}), gf(5), 1, rng);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(test::oracle_defect(a), 1);
  EXPECT_TRUE(is_nondegenerate(a));
  // Factor 1 carries the four collinear points, so m counts n_1 - 1 = 1.
  const PointSet b = construct_example_n2(Shape({2, 1}), gf(7), 2, rng);
  EXPECT_EQ(b.size(), 5u);
  EXPECT_EQ(test::oracle_defect(b), 2);
  EXPECT_TRUE(is_nondegenerate(b));
  try {
    construct_example_n2(Shape({1, 1}), gf(2), 2, rng);
    FAIL() << "expected FieldTooSmall";
  } catch (const FieldTooSmall& e) {
    EXPECT_EQ(e.minimal_prime(), 3u);
  }
}

TEST(Construct, Extremal) {
  Rng rng(1);
  const PointSet a = construct_extremal_n400(Shape({1, 1, 1}), gf(5), 1, rng);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_TRUE(fit_multidegree_one(a));
  for (const Shape& shape : {Shape({2, 1}), Shape({1, 1, 1}), Shape({2, 2}), Shape({3, 1, 1})}) {
    for (int e = 1; e <= 2; ++e) {
      const PointSet s = construct_extremal_n400(shape, gf(7), e, rng);
      const int k = static_cast<int>(shape.k());
      EXPECT_EQ(static_cast<int>(s.size()), shape.m() + k + e);
      EXPECT_GE(static_cast<int>(s.size()), k + e + 1);
      EXPECT_EQ(test::oracle_defect(s), e);
      EXPECT_TRUE(is_minimal(s).overall);
      EXPECT_TRUE(is_nondegenerate(s));
    }
  }
}

TEST(Construct, P2P1Circuits) {
  Rng rng(3);
  for (P2P1Kind kind : {P2P1Kind::kTwistedCubic, P2P1Kind::kConicLine, P2P1Kind::kThreeLines}) {
    for (int trial = 0; trial < 5; ++trial) {
      const PointSet s = construct_p2p1_circuit(gf(5), kind, rng);
      EXPECT_EQ(s.size(), 5u);
      EXPECT_EQ(test::oracle_defect(s), 1);
      for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(test::oracle_defect(s.without(j)), 0);
      EXPECT_TRUE(is_nondegenerate(s));
      if (kind == P2P1Kind::kTwistedCubic) {
        // h^0(I_S(1,1)) = 6 - rank.
        EXPECT_EQ(6 - test::oracle_rank(s), 2);
      }
    }
  }
  try {
    construct_p2p1_circuit(gf(3), P2P1Kind::kTwistedCubic, rng);
    FAIL() << "expected FieldTooSmall";
  } catch (const FieldTooSmall& e) {
    EXPECT_EQ(e.minimal_prime(), 5u);
  }
  EXPECT_EQ(parse_p2p1_kind("conic_line"), P2P1Kind::kConicLine);
  EXPECT_FALSE(parse_p2p1_kind("conic"));
}

}  // namespace
}  // namespace segre
