#include <benchmark/benchmark.h>

#include "gradedflip/cech.hpp"
#include "gradedflip/ci.hpp"
#include "gradedflip/complexes.hpp"
#include "gradedflip/ring_spec.hpp"
#include "gradedflip/windows.hpp"

using namespace gradedflip;

static void BM_CohomologyTable(benchmark::State& state) {
  RingSpec s = parse_ring_spec("var x1 1\nvar x2 1\nvar y1 -1\nvar y2 -1\n");
  CechComplex cx(s, Side::Plus, true);
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CohomologyTable t = cohomology_table(cx, -w, w);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_CohomologyTable)->Arg(4)->Arg(8)->Arg(12);

static void BM_ClosedFormTable(benchmark::State& state) {
  RingSpec s = parse_ring_spec("var x1 1\nvar x2 1\nvar y1 -1\nvar y2 -1\n");
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CohomologyTable t = closed_form_table(s, Side::Plus, -w, w);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_ClosedFormTable)->Arg(8)->Arg(12);

static void BM_BuchbergerFlipFamily(benchmark::State& state) {
  RingSpec s = brown_reid_ring({3, 4, static_cast<long>(state.range(0)),
                                static_cast<long>(state.range(0)), 1, 1});
  for (auto _ : state) {
    GroebnerBasis gb = buchberger(s.relations);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerFlipFamily)->Arg(1)->Arg(2);

static void BM_FunctorImage(benchmark::State& state) {
  RingSpec s = brown_reid_ring({1, 2, 1, 1, 1, 1});
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FunctorImage img = functor_image(s, i);
    benchmark::DoNotOptimize(img);
  }
}
BENCHMARK(BM_FunctorImage)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
