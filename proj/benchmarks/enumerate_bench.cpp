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


#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "segre/enumerate.hpp"
#include "segre/error.hpp"
#include "segre/invariants.hpp"
#include "segre/random.hpp"
#include "segre/rnc.hpp"

namespace {

using segre::FieldSpec;
using segre::Shape;

// Nondegenerate circuits of (P^1)^3 over GF(p), first point fixed.
void BM_EnumerateCircuits111(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(static_cast<std::uint64_t>(state.range(0)));
  const Shape shape({1, 1, 1});
  const segre::PointTable table(shape, f);
  segre::EnumTask task{shape, f, 5, {.nondegenerate = true, .circuit = true},
                       segre::Reduction::kFixFirstPoint};
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const segre::EnumStats st = segre::enumerate_sets(task, table, [](const segre::EnumHit&) {});
    nodes += st.nodes;
    benchmark::DoNotOptimize(st.total);
  }
  state.counters["nodes/s"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_EnumerateCircuits111)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateAll(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(3);
  const Shape shape({2, 1});
  const segre::PointTable table(shape, f);
  segre::EnumTask task{shape, f, static_cast<int>(state.range(0)), {},
                       segre::Reduction::kFixFirstPoint};
  for (auto _ : state) {
    benchmark::DoNotOptimize(segre::enumerate_sets(task, table, [](const segre::EnumHit&) {}).total);
  }
}
BENCHMARK(BM_EnumerateAll)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const FieldSpec f = state.range(0) == 0 ? FieldSpec::rational() : FieldSpec::prime(101);
  const Shape shape({1, 1, 1});
  segre::Rng rng(7);
  std::vector<segre::PointSet> sets;
  while (sets.size() < 32) {
    std::vector<segre::MPoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(segre::random_mpoint(shape, f, rng));
    try {
      sets.emplace_back(shape, f, pts);
    } catch (const segre::DuplicatePointError&) {
    }
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(segre::analyze(sets[i++ % sets.size()]));
  }
}
BENCHMARK(BM_Analyze)->Arg(0)->Arg(1);

void BM_FitCurve(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(101);
  segre::Rng rng(11);
  const segre::RncCurve c = segre::random_b_k(f, 3, rng);
  std::vector<segre::MPoint> pts;
  for (long long t = 0; t < 5; ++t) pts.push_back(segre::curve_point(c, segre::ProjPoint::affine(f.from_int(t))));
  const segre::PointSet s(Shape({1, 1, 1}), f, pts);
  for (auto _ : state) benchmark::DoNotOptimize(segre::fit_multidegree_one(s));
}
BENCHMARK(BM_FitCurve);

}  // namespace

BENCHMARK_MAIN();
