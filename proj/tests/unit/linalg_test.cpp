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

#include <algorithm>
#include <numeric>

#include "segre/error.hpp"
#include "segre/projective.hpp"
#include "segre/random.hpp"
#include "test_util.hpp"

namespace segre {
namespace {

using test::gf;
using test::pp;
using test::qq;

Matrix ints(const FieldSpec& f, std::vector<std::vector<long long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (long long x : r) v.push_back(f.from_int(x));
    out.push_back(v);
  }
  return Matrix::from_rows(f, out);
}

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(FieldSpec::prime(4), PreconditionError);
  EXPECT_THROW(FieldSpec::prime(1), PreconditionError);
  EXPECT_THROW(FieldSpec::prime(2147483648ULL), PreconditionError);
  EXPECT_NO_THROW(FieldSpec::prime(2147483647ULL));
}

TEST(Field, ResidueArithmetic) {
  const FieldSpec f = gf(5);
  EXPECT_EQ((f.from_int(3) * f.from_int(2)).residue_value(), 1u);
  EXPECT_EQ(f.from_int(-1).residue_value(), 4u);
  EXPECT_EQ(f.from_int(3).inverse().residue_value(), 2u);
  EXPECT_EQ(f.from_fraction(1, 2).residue_value(), 3u);
  EXPECT_THROW(f.zero().inverse(), DegeneracyError);
}

TEST(Field, RationalsAreCanonical) {
  const FieldSpec f = qq();
  const Scalar a = f.from_fraction(2, -4);
  EXPECT_EQ(a.rational_value(), mpq_class(-1, 2));
  EXPECT_EQ(a.rational_value().get_den(), 2);
  EXPECT_EQ(a + f.from_fraction(1, 2), f.zero());
}

TEST(Field, MixingFieldsThrows) {
  EXPECT_THROW(gf(5).one() + gf(7).one(), FieldMismatch);
  EXPECT_THROW(gf(5).one() + qq().one(), FieldMismatch);
}

TEST(Rank, IdentityZeroVandermonde) {
  const FieldSpec f = gf(5);
  EXPECT_EQ(rank(Matrix::identity(f, 3)), 3u);
  EXPECT_EQ(rank(Matrix(f, 2, 4)), 0u);
  std::vector<std::vector<long long>> v;
  for (long long t = 0; t < 4; ++t) v.push_back({1, t, t * t});
  EXPECT_EQ(rank(ints(f, v)), static_cast<std::size_t>(test::oracle_rank_mod(v, 5)));
  EXPECT_EQ(rank(ints(f, v)), 3u);
}

TEST(Rank, RaggedRowsThrow) {
  const FieldSpec f = gf(5);
  EXPECT_THROW(Matrix::from_rows(f, {Vector{f.one(), f.one()}, Vector{f.one()}}), ShapeError);
}

TEST(Rank, InvariantUnderRowPermutationAndInvertibleFactors) {
  Rng rng(11);
  for (const FieldSpec& f : {gf(5), qq()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + uniform_below(rng, 4), c = 1 + uniform_below(rng, 4);
      Matrix m(f, r, c);
      // Low-rank products exercise the interesting cases.
      const std::size_t inner = 1 + uniform_below(rng, 3);
      Matrix a(f, r, inner), b(f, inner, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < inner; ++j) a(i, j) = random_scalar(f, rng);
      for (std::size_t i = 0; i < inner; ++i)
        for (std::size_t j = 0; j < c; ++j) b(i, j) = random_scalar(f, rng);
      m = a * b;
      const std::size_t base = rank(m);
      std::vector<std::vector<mpq_class>> rows;
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<mpq_class> row;
        for (std::size_t j = 0; j < c; ++j) {
          row.push_back(f.is_prime() ? mpq_class(m(i, j).residue_value())
                                     : m(i, j).rational_value());
        }
        rows.push_back(row);
      }
      if (f.is_rational()) {
        ASSERT_EQ(base, static_cast<std::size_t>(test::oracle_rank_q(rows)));
      }
      std::vector<Vector> perm = m.row_vectors();
      std::reverse(perm.begin(), perm.end());
      ASSERT_EQ(rank(Matrix::from_rows(f, perm, c)), base);
      ASSERT_EQ(rank(random_invertible(f, r, rng) * m * random_invertible(f, c, rng)), base);
    }
  }
}

TEST(Subspace, TwoPlanesOfP3MeetInALine) {
  const FieldSpec f = gf(5);
  auto vec = [&](std::vector<long long> v) {
    Vector out;
    for (long long x : v) out.push_back(f.from_int(x));
    return out;
  };
  const auto a = LinearSubspace::span(f, 4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});
  const auto b = LinearSubspace::span(f, 4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 0, 1})});
  EXPECT_EQ(span_intersect(a, b).proj_dim(), 1);
  EXPECT_EQ(span_intersect(a, a), a);
  EXPECT_THROW(span_intersect(a, LinearSubspace::zero(f, 3)), ShapeError);
}

TEST(Subspace, GrassmannOnRandomPairs) {
  Rng rng(3);
  for (const FieldSpec& f : {gf(5), qq()}) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 2 + uniform_below(rng, 4);
      auto random_span = [&] {
        std::vector<Vector> gens(uniform_below(rng, n + 1));
        for (Vector& g : gens) {
          g = zero_vector(f, n);
          for (Scalar& x : g) x = random_scalar(f, rng, 2);
        }
        return LinearSubspace::span(f, n, gens);
      };
      const LinearSubspace a = random_span(), b = random_span();
      const LinearSubspace meet = span_intersect(a, b);
      ASSERT_EQ(meet.proj_dim(), a.proj_dim() + b.proj_dim() - span_sum(a, b).proj_dim());
      ASSERT_TRUE(a.contains(meet));
      ASSERT_TRUE(b.contains(meet));
    }
  }
}

TEST(Projective, NormalizationIsIdempotent) {
  Rng rng(5);
  for (const FieldSpec& f : {gf(5), qq()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ProjPoint p = random_proj_point(f, 3, rng);
      EXPECT_EQ(ProjPoint(p.coords()), p);
      Vector scaled = p.coords();
      const Scalar c = random_nonzero_scalar(f, rng);
      for (Scalar& x : scaled) x *= c;
      EXPECT_EQ(ProjPoint(scaled), p);
    }
  }
}

TEST(Pgl2, FitIdentity) {
  const FieldSpec f = gf(5);
  const std::array<ProjPoint, 3> src{pp(f, {0, 1}), pp(f, {1, 1}), pp(f, {1, 0})};
  EXPECT_EQ(fit_pgl2(src, src), Matrix::identity(f, 2));
}

TEST(Pgl2, FitOneMinusT) {
  const FieldSpec f = gf(5);
  const std::array<ProjPoint, 3> src{pp(f, {0, 1}), pp(f, {1, 1}), pp(f, {1, 0})};
  const std::array<ProjPoint, 3> dst{pp(f, {1, 1}), pp(f, {0, 1}), pp(f, {1, 0})};
  const Matrix m = fit_pgl2(src, dst);
  // t -> 1 - t is (t : u) -> (-t + u : u).
  EXPECT_TRUE(projectively_equal(m, ints(f, {{-1, 1}, {0, 1}})));
  for (long long t = 0; t < 5; ++t) {
    EXPECT_EQ(apply(m, pp(f, {t, 1})), pp(f, {1 - t, 1}));
  }
  EXPECT_TRUE(m(0, 0).is_one());
}

TEST(Pgl2, FitDoubling) {
  const FieldSpec f = gf(5);
  const std::array<ProjPoint, 3> src{pp(f, {0, 1}), pp(f, {1, 1}), pp(f, {2, 1})};
  const std::array<ProjPoint, 3> dst{pp(f, {0, 1}), pp(f, {2, 1}), pp(f, {4, 1})};
  EXPECT_TRUE(projectively_equal(fit_pgl2(src, dst), ints(f, {{2, 0}, {0, 1}})));
}

TEST(Pgl2, RepeatedPointThrows) {
  const FieldSpec f = gf(5);
  const std::array<ProjPoint, 3> src{pp(f, {0, 1}), pp(f, {0, 1}), pp(f, {2, 1})};
  const std::array<ProjPoint, 3> dst{pp(f, {0, 1}), pp(f, {2, 1}), pp(f, {4, 1})};
  EXPECT_THROW(fit_pgl2(src, dst), DegeneracyError);
  EXPECT_THROW(fit_pgl2(dst, src), DegeneracyError);
}

TEST(Pgl2, EquivalenceExamples) {
  const FieldSpec f = gf(7);
  const std::vector<ProjPoint> a{pp(f, {0, 1}), pp(f, {1, 1}), pp(f, {1, 0}), pp(f, {2, 1})};
  const std::vector<ProjPoint> b{pp(f, {0, 1}), pp(f, {1, 1}), pp(f, {1, 0}), pp(f, {3, 1})};
  const auto same = projectively_equivalent(a, a);
  ASSERT_TRUE(same);
  EXPECT_EQ(*same, Matrix::identity(f, 2));
  EXPECT_FALSE(projectively_equivalent(a, b));
  EXPECT_THROW(projectively_equivalent(a, std::vector<ProjPoint>(a.begin(), a.end() - 1)),
               ShapeError);
}

TEST(Pgl2, RecoversRandomMaps) {
  Rng rng(17);
  for (const FieldSpec& f : {gf(5), qq()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix g = random_invertible(f, 2, rng);
      std::vector<ProjPoint> a;
      while (a.size() < 4) {
        const ProjPoint p = random_proj_point(f, 1, rng);
        if (std::find(a.begin(), a.end(), p) == a.end()) a.push_back(p);
      }
      std::vector<ProjPoint> b;
      for (const ProjPoint& p : a) b.push_back(apply(g, p));
      const auto m = projectively_equivalent(a, b);
      ASSERT_TRUE(m);
      ASSERT_TRUE(projectively_equal(*m, g));
    }
  }
}

}  // namespace
}  // namespace segre
