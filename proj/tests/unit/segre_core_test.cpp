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

#include "segre/error.hpp"
#include "segre/moves.hpp"
#include "segre/random.hpp"
#include "segre/xrank.hpp"
#include "test_util.hpp"

namespace segre {
namespace {

using test::gf;
using test::mp;
using test::pp;
using test::ps;
using test::qq;

Vector vec(const FieldSpec& f, std::vector<long long> v) {
  Vector out;
  for (long long x : v) out.push_back(f.from_int(x));
  return out;
}

// Three collinear points of P^2 plus one off their line.
PointSet collinear_plus_one() {
  const FieldSpec f = gf(5);
  return ps(f, {2}, {mp(f, {{1, 0, 0}}), mp(f, {{0, 1, 0}}), mp(f, {{1, 1, 0}}),
                     mp(f, {{0, 0, 1}})});
}

// Four points of P^2, no three collinear.
PointSet planar_frame() {
  const FieldSpec f = gf(5);
  return ps(f, {2}, {mp(f, {{1, 0, 0}}), mp(f, {{0, 1, 0}}), mp(f, {{0, 0, 1}}),
                     mp(f, {{1, 1, 1}})});
}

// The (1,1) circuit {(0,0),(0,inf),(inf,0),(inf,inf)} in affine notation.
// Four points of the diagonal conic of P^1 x P^1: coplanar, any three
// independent.
PointSet conic_circuit() {
  const FieldSpec f = gf(5);
  return ps(f, {1, 1}, {mp(f, {{0, 1}, {0, 1}}), mp(f, {{1, 0}, {1, 0}}),
                        mp(f, {{1, 1}, {1, 1}}), mp(f, {{2, 1}, {2, 1}})});
}

TEST(Shape, DerivedQuantities) {
  const Shape s({2, 1, 3});
  EXPECT_EQ(s.k(), 3u);
  EXPECT_EQ(s.ambient_size(), 24u);
  EXPECT_EQ(s.r(), 23u);
  EXPECT_EQ(s.m(), 3);
  EXPECT_EQ(Shape::parse("2,1,3"), s);
  EXPECT_THROW(Shape({}), ShapeError);
  EXPECT_THROW(Shape({0}), ShapeError);
  EXPECT_THROW(Shape::parse("2,x"), ShapeError);
}

TEST(PointSet, RejectsDuplicatesAndMismatches) {
  const FieldSpec f = gf(5);
  EXPECT_THROW(ps(f, {1}, {mp(f, {{1, 2}}), mp(f, {{2, 4}})}), DuplicatePointError);
  EXPECT_THROW(ps(f, {2}, {mp(f, {{1, 2}})}), ShapeError);
  EXPECT_THROW(ps(f, {1}, {mp(gf(7), {{1, 2}})}), FieldMismatch);
}

TEST(Embed, Examples) {
  const FieldSpec f = gf(5);
  EXPECT_EQ(segre_embed(Shape({1, 1}), mp(f, {{1, 0}, {0, 1}})), vec(f, {0, 1, 0, 0}));
  EXPECT_EQ(segre_embed(Shape({1, 1, 1}), mp(f, {{1, 1}, {1, 1}, {1, 1}})),
            vec(f, {1, 1, 1, 1, 1, 1, 1, 1}));
  const FieldSpec f7 = gf(7);
  EXPECT_EQ(segre_embed(Shape({2}), mp(f7, {{1, 2, 3}})), vec(f7, {1, 2, 3}));
  EXPECT_THROW(segre_embed(Shape({2}), mp(f, {{1, 2}})), ShapeError);
}

TEST(Embed, MatchesMultiIndexOracle) {
  Rng rng(2);
  for (const FieldSpec& f : {gf(5), qq()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Shape shape({1 + static_cast<int>(uniform_below(rng, 3)),
                         1 + static_cast<int>(uniform_below(rng, 2)),
                         1 + static_cast<int>(uniform_below(rng, 2))});
      const MPoint p = random_mpoint(shape, f, rng);
      const Vector v = segre_embed(shape, p);
      const std::vector<mpq_class> o = test::oracle_embed(p);
      ASSERT_EQ(v.size(), o.size());
      // The library normalizes; the oracle multiplies normalized factors,
      // whose product already has leading entry 1.
      for (std::size_t j = 0; j < v.size(); ++j) {
        const mpq_class x = f.is_prime() ? mpq_class(v[j].residue_value()) : v[j].rational_value();
        if (f.is_prime()) {
          ASSERT_EQ(x, mpq_class(o[j].get_num() % 5));
        } else {
          ASSERT_EQ(x, o[j]);
        }
      }
    }
  }
}

TEST(Defect, Examples) {
  const FieldSpec f = gf(5);
  const PointSet line = ps(f, {1}, {mp(f, {{0, 1}}), mp(f, {{1, 1}}), mp(f, {{1, 0}})});
  EXPECT_EQ(defect(line).span_dim, 1);
  EXPECT_EQ(defect(line).e, 1);
  EXPECT_EQ(defect(test::diagonal5()).span_dim, 3);
  EXPECT_EQ(defect(test::diagonal5()).e, 1);
  const PointSet one = ps(f, {2, 1}, {mp(f, {{1, 2, 3}, {0, 1}})});
  EXPECT_EQ(defect(one).span_dim, 0);
  EXPECT_EQ(defect(one).e, 0);
  EXPECT_THROW(defect(ps(f, {1}, {})), PreconditionError);
}

TEST(Defect, PatternExamples) {
  const FieldSpec f = gf(5);
  const PointSet same_first = ps(f, {1, 1}, {mp(f, {{1, 2}, {0, 1}}), mp(f, {{1, 2}, {1, 1}})});
  EXPECT_EQ(defect_pattern(same_first, Pattern::eps(2, 0)), 1);
  EXPECT_EQ(defect_pattern(same_first, Pattern::all_ones(2)), defect(same_first).e);
  EXPECT_THROW(Pattern({false, false}), PreconditionError);
}

TEST(Defect, PatternMatchesForgetfulFormula) {
  // defect_pattern(S, eps_hat_i) = e(eta_i(S)) + #S - #eta_i(S), with the
  // right side computed by the independent oracle.
  Rng rng(8);
  const FieldSpec f = gf(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Shape shape({1, 1, 1});
    std::vector<MPoint> pts;
    const std::size_t n = 1 + uniform_below(rng, 6);
    while (pts.size() < n) {
      MPoint p = random_mpoint(shape, f, rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const PointSet s(shape, f, pts);
    for (std::size_t i = 0; i < 3; ++i) {
      const PointSet eta = forget_factor(s, i);
      const long rhs = test::oracle_defect(eta) + static_cast<long>(s.size() - eta.size());
      ASSERT_EQ(defect_pattern(s, Pattern::eps_hat(3, i)), rhs);
    }
  }
}

TEST(MinimalSubspace, Examples) {
  const FieldSpec f = gf(5);
  const PointSet flat = ps(f, {2, 1}, {mp(f, {{1, 2, 3}, {0, 1}}), mp(f, {{1, 2, 3}, {1, 1}})});
  const MinimalSubspace ms = minimal_subspace(flat);
  EXPECT_EQ(ms.dims, (std::vector<int>{0, 1}));
  EXPECT_FALSE(is_nondegenerate(flat));
  ASSERT_TRUE(ms.reduced);
  EXPECT_EQ(ms.reduced->shape(), Shape({1}));
  EXPECT_EQ(minimal_subspace(test::diagonal5()).dims, (std::vector<int>{1, 1, 1}));
  EXPECT_TRUE(is_nondegenerate(test::diagonal5()));
  const PointSet two = ps(f, {2}, {mp(f, {{1, 2, 3}}), mp(f, {{0, 1, 4}})});
  EXPECT_EQ(minimal_subspace(two).dims, (std::vector<int>{1}));
}

TEST(Minimality, Examples) {
  const FieldSpec f = gf(5);
  const PointSet pair = ps(f, {1, 1}, {mp(f, {{1, 2}, {0, 1}}), mp(f, {{1, 2}, {1, 1}})});
  const Minimality m = is_minimal(pair);
  EXPECT_FALSE(m.overall);
  EXPECT_EQ(m.per_factor, (std::vector<bool>{true, false}));
  EXPECT_TRUE(is_minimal(test::diagonal5()).overall);
  const PointSet two = ps(f, {2}, {mp(f, {{1, 2, 3}}), mp(f, {{0, 1, 4}})});
  EXPECT_EQ(is_minimal(two).per_factor, (std::vector<bool>{false}));
}

TEST(Circuit, Examples) {
  EXPECT_TRUE(is_circuit(planar_frame()));
  EXPECT_TRUE(is_circuit(test::diagonal5()));
  EXPECT_FALSE(is_circuit(collinear_plus_one()));
}

TEST(Essential, Examples) {
  const EssentialPartition circuit = essential_partition(planar_frame());
  EXPECT_EQ(circuit.kernel, planar_frame());
  EXPECT_TRUE(circuit.tail.empty());

  const PointSet s = collinear_plus_one();
  const EssentialPartition split = essential_partition(s);
  const auto oracle = test::oracle_minimal_full_defect(s);
  ASSERT_EQ(oracle.size(), 1u);
  EXPECT_EQ(split.kernel, s.subset(oracle[0]));
  EXPECT_EQ(split.kernel.size(), 3u);
  EXPECT_EQ(split.tail.size(), 1u);

  // Four points on a factor-1 line of (1,1,1) plus one point off it.
  const FieldSpec f = gf(5);
  const PointSet fiber = ps(f, {1, 1, 1},
                            {mp(f, {{0, 1}, {0, 1}, {0, 1}}), mp(f, {{1, 1}, {0, 1}, {0, 1}}),
                             mp(f, {{2, 1}, {0, 1}, {0, 1}}), mp(f, {{3, 1}, {0, 1}, {0, 1}}),
                             mp(f, {{1, 1}, {1, 1}, {1, 1}})});
  EXPECT_EQ(defect(fiber).e, 2);
  EXPECT_EQ(essential_partition(fiber).kernel.size(), 4u);

  const PointSet indep = ps(f, {1}, {mp(f, {{0, 1}}), mp(f, {{1, 0}})});
  EXPECT_THROW(essential_partition(indep), PreconditionError);
  EXPECT_THROW(is_strongly_essential(indep), PreconditionError);
}

TEST(Essential, StrongExamples) {
  const FieldSpec f = gf(5);
  EXPECT_TRUE(is_strongly_essential(planar_frame()));
  const PointSet four = ps(f, {1}, {mp(f, {{0, 1}}), mp(f, {{1, 1}}), mp(f, {{2, 1}}),
                                    mp(f, {{1, 0}})});
  EXPECT_EQ(defect(four).e, 2);
  EXPECT_TRUE(is_strongly_essential(four));
  EXPECT_FALSE(is_strongly_essential(collinear_plus_one()));
}

TEST(Essential, EmptyTailDoesNotForceTheSubsetLaw) {
  // Two collinear triples on skew lines of P^3: every point is essential,
  // but one triple has defect 1 where the formula would give 0.
  const FieldSpec f = gf(5);
  const PointSet s = ps(f, {3}, {mp(f, {{1, 0, 0, 0}}), mp(f, {{0, 1, 0, 0}}),
                                 mp(f, {{1, 1, 0, 0}}), mp(f, {{0, 0, 1, 0}}),
                                 mp(f, {{0, 0, 0, 1}}), mp(f, {{0, 0, 1, 1}})});
  EXPECT_EQ(defect(s).e, 2);
  EXPECT_TRUE(essential_partition(s).tail.empty());
  EXPECT_FALSE(is_strongly_essential(s));
  const PointSet triple = ps(f, {3}, {mp(f, {{1, 0, 0, 0}}), mp(f, {{0, 1, 0, 0}}),
                                      mp(f, {{1, 1, 0, 0}})});
  EXPECT_EQ(defect(triple).e, 1);
}

TEST(Analyze, IndependentSetReport) {
  const FieldSpec f = gf(5);
  const PointSet s = ps(f, {1, 1}, {mp(f, {{0, 1}, {0, 1}}), mp(f, {{1, 0}, {1, 0}})});
  const DefectReport r = analyze(s);
  EXPECT_EQ(r.defect_e, 0);
  EXPECT_TRUE(r.kernel.empty());
  EXPECT_EQ(r.tail, s);
  EXPECT_FALSE(r.circuit);
  EXPECT_FALSE(r.strongly_essential);
}

TEST(Increase, GenericPairOfP1xP1) {
  const FieldSpec f = gf(5);
  const PointSet s = ps(f, {1, 1}, {mp(f, {{0, 1}, {0, 1}}), mp(f, {{1, 0}, {1, 0}})});
  Rng rng(4);
  const IncreaseResult r = elementary_increase(s, s[0], 0, rng);
  EXPECT_EQ(r.set.size(), 3u);
  EXPECT_TRUE(r.independent);
  EXPECT_EQ(test::oracle_rank(r.set), 3);
}

TEST(Increase, SpanContainmentAndPreconditions) {
  Rng rng(6);
  const FieldSpec f = gf(5);
  const Shape shape({2, 1});
  int independent = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<MPoint> pts;
    while (pts.size() < 3) {
      MPoint p = random_mpoint(shape, f, rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const PointSet s(shape, f, pts);
    if (defect(s).e != 0) continue;
    const std::size_t i = uniform_below(rng, 2);
    const IncreaseResult r = elementary_increase(s, s[0], i, rng);
    const LinearSubspace before = LinearSubspace::span(f, 6, embedding_matrix(s).row_vectors());
    const LinearSubspace after = LinearSubspace::span(f, 6, embedding_matrix(r.set).row_vectors());
    ASSERT_TRUE(after.contains(before));
    ASSERT_EQ(r.set.size(), 4u);
    independent += r.independent;
  }
  EXPECT_GT(independent, 0);

  const PointSet dep = ps(f, {1}, {mp(f, {{0, 1}}), mp(f, {{1, 1}}), mp(f, {{1, 0}})});
  EXPECT_THROW(elementary_increase(dep, dep[0], 0, rng), PreconditionError);
  const PointSet full = ps(f, {1}, {mp(f, {{0, 1}}), mp(f, {{1, 0}})});
  EXPECT_THROW(elementary_increase(full, full[0], 0, rng), PreconditionError);
}

TEST(Increase, DegenerateFactorGetsIndependentOutput) {
  // pi_1(S) spans a line of P^2, so some line through pi_1(o) leaves it.
  Rng rng(9);
  const FieldSpec f = gf(5);
  const PointSet s = ps(f, {2, 1}, {mp(f, {{1, 0, 0}, {0, 1}}), mp(f, {{0, 1, 0}, {1, 0}})});
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_TRUE(elementary_increase(s, s[0], 0, rng).independent);
  }
}

TEST(Decrease, Examples) {
  const FieldSpec f = gf(5);
  const MPoint a = mp(f, {{0, 1}, {0, 1}});
  const MPoint b = mp(f, {{1, 1}, {0, 1}});
  const MPoint c = mp(f, {{1, 0}, {1, 0}});
  const PointSet s = ps(f, {1, 1}, {a, b, c});
  const Shape& shape = s.shape();

  const PointSet keep_a = elementary_decrease(s, segre_embed(shape, a), a, b, 0);
  EXPECT_TRUE(keep_a.contains(a));
  EXPECT_FALSE(keep_a.contains(b));
  EXPECT_EQ(keep_a.size(), 2u);

  // q = nu(a) + nu(b) = ((0,1) + (1,1)) x (0,1) = nu((1:2),(0:1)).
  Vector q = segre_embed(shape, a);
  const Vector vb = segre_embed(shape, b);
  for (std::size_t j = 0; j < q.size(); ++j) q[j] += vb[j];
  const PointSet moved = elementary_decrease(s, q, a, b, 0);
  EXPECT_EQ(moved, ps(f, {1, 1}, {mp(f, {{1, 2}, {0, 1}}), c}));

  const PointSet rest = elementary_decrease(s, segre_embed(shape, c), a, b, 0);
  EXPECT_EQ(rest, ps(f, {1, 1}, {c}));

  EXPECT_THROW(elementary_decrease(s, q, a, c, 0), PreconditionError);
  EXPECT_THROW(elementary_decrease(s, vec(f, {0, 0, 1, 0}), a, b, 0), PreconditionError);
}

TEST(Project, InjectiveImageAndCenterHit) {
  const FieldSpec f = gf(5);
  const PointSet s = ps(f, {2, 1}, {mp(f, {{1, 0, 0}, {0, 1}}), mp(f, {{0, 1, 0}, {1, 0}}),
                                    mp(f, {{1, 1, 0}, {1, 1}})});
  const LinearSubspace v = LinearSubspace::span(f, 3, {vec(f, {0, 0, 1})});
  const ProjectionResult r = linear_project(s, 0, v);
  EXPECT_EQ(r.image.shape(), Shape({1, 1}));
  EXPECT_TRUE(r.injective);
  EXPECT_LE(defect(s).e, defect(r.image).e);

  const LinearSubspace hit = LinearSubspace::span(f, 3, {vec(f, {1, 0, 0})});
  EXPECT_THROW(linear_project(s, 0, hit), PreconditionError);
}

TEST(Project, DefectNeverDecreases) {
  Rng rng(12);
  const FieldSpec f = gf(5);
  const Shape shape({3, 1});
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<MPoint> pts;
    const std::size_t n = 2 + uniform_below(rng, 5);
    while (pts.size() < n) {
      MPoint p = random_mpoint(shape, f, rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const PointSet s(shape, f, pts);
    const LinearSubspace v =
        LinearSubspace::span(f, 4, {random_proj_point(f, 3, rng).coords()});
    ProjectionResult r{s, false};
    try {
      r = linear_project(s, 0, v);
    } catch (const PreconditionError&) {
      continue;
    }
    if (!r.injective) continue;
    ++checked;
    ASSERT_LE(defect(s).e, defect(r.image).e);
  }
  EXPECT_GT(checked, 50);
}

TEST(XRank, PointOfX) {
  const FieldSpec f = gf(3);
  const MPoint p = mp(f, {{1, 2}, {0, 1}});
  const RankWitness w = x_rank(segre_embed(Shape({1, 1}), p), Shape({1, 1}), f, 2);
  ASSERT_TRUE(w.rank);
  EXPECT_EQ(*w.rank, 1);
  ASSERT_EQ(w.witnesses.size(), 1u);
  EXPECT_EQ(w.witnesses[0], ps(f, {1, 1}, {p}));
}

TEST(XRank, CircuitPartitionPoint) {
  const PointSet s = conic_circuit();
  ASSERT_TRUE(is_circuit(s));
  const PointSet a = s.subset(std::uint64_t{0b0011});
  const PointSet b = s.subset(std::uint64_t{0b1100});
  const Vector q = circuit_partition_point(s, a);
  const RankWitness w = x_rank(q, s.shape(), s.field(), 3);
  ASSERT_TRUE(w.rank);
  EXPECT_EQ(*w.rank, 2);
  EXPECT_NE(std::find(w.witnesses.begin(), w.witnesses.end(), a), w.witnesses.end());
  EXPECT_NE(std::find(w.witnesses.begin(), w.witnesses.end(), b), w.witnesses.end());
}

TEST(XRank, RankTwoMatrixOverGF3) {
  // For two factors the X-rank is the matrix rank of q read as a 2x2 array.
  const FieldSpec f = gf(3);
  const Vector q = vec(f, {1, 0, 0, 1});
  const RankWitness w = x_rank(q, Shape({1, 1}), f, 3);
  ASSERT_TRUE(w.rank);
  EXPECT_EQ(*w.rank, test::oracle_rank_mod({{1, 0}, {0, 1}}, 3));
  // Brute force: pairs {a, b} with q in their span.
  std::size_t pairs = 0;
  const auto all = rational_points(Shape({1, 1}), f);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const PointSet ab(Shape({1, 1}), f, {all[i], all[j]});
      if (irredundantly_spans(q, ab)) ++pairs;
    }
  }
  EXPECT_EQ(w.witnesses.size(), pairs);
  EXPECT_THROW(x_rank(vec(qq(), {1, 0, 0, 1}), Shape({1, 1}), qq(), 2), UnsupportedError);
}

TEST(XRank, UnbalancedSplitGivesTheSingleton) {
  const PointSet s = conic_circuit();
  const PointSet a = s.subset(std::uint64_t{0b0001});
  const Vector q = circuit_partition_point(s, a);
  EXPECT_EQ(normalize_leading(q), segre_embed(s.shape(), s[0]));
}

TEST(XRank, CollinearTripleSplit) {
  const FieldSpec f = gf(5);
  const PointSet line = ps(f, {1}, {mp(f, {{0, 1}}), mp(f, {{1, 1}}), mp(f, {{1, 0}})});
  const PointSet a = line.subset(std::uint64_t{0b010});
  EXPECT_EQ(normalize_leading(circuit_partition_point(line, a)), segre_embed(line.shape(), line[1]));
}

TEST(XRank, Irredundance) {
  const FieldSpec f = gf(5);
  const MPoint p = mp(f, {{0, 1}, {0, 1}});
  const MPoint p2 = mp(f, {{1, 0}, {1, 0}});
  const Vector q1 = segre_embed(Shape({1, 1}), p);
  EXPECT_TRUE(irredundantly_spans(q1, ps(f, {1, 1}, {p})));
  EXPECT_FALSE(irredundantly_spans(q1, ps(f, {1, 1}, {p, p2})));
  Vector q2 = q1;
  const Vector v2 = segre_embed(Shape({1, 1}), p2);
  for (std::size_t j = 0; j < q2.size(); ++j) q2[j] += v2[j];
  EXPECT_TRUE(irredundantly_spans(q2, ps(f, {1, 1}, {p, p2})));
}

TEST(LemmaCheck, EqualSetsViolatePrecondition) {
  const PointSet s = conic_circuit();
  const PointSet a = s.subset(std::uint64_t{0b0011});
  const Vector q = circuit_partition_point(s, a);
  const LemmaCheck c = check_lemma_ee0(q, a, a, 0, vec(s.field(), {1, 0}));
  EXPECT_FALSE(c.precondition_ok);
  EXPECT_FALSE(c.violation.empty());
}

TEST(LemmaCheck, CircuitHalvesOnP1xP1) {
  const PointSet s = conic_circuit();
  const PointSet a = s.subset(std::uint64_t{0b0011});
  const PointSet b = s.subset(std::uint64_t{0b1100});
  const Vector q = circuit_partition_point(s, a);
  const FieldSpec& f = s.field();
  for (long long t = 0; t < 5; ++t) {
    const LemmaCheck c = check_lemma_ee0(q, a, b, 0, vec(f, {1, t}));
    ASSERT_TRUE(c.precondition_ok) << c.violation;
    if (c.hypothesis_holds) {
      EXPECT_TRUE(c.conclusion_holds);
    }
  }
}

}  // namespace
}  // namespace segre
