#include <benchmark/benchmark.h>

#include "opcoh/coherence.hpp"
#include "opcoh/geometry.hpp"
#include "opcoh/homology.hpp"

using namespace opcoh;

static void BM_BuildLinear(benchmark::State& state) {
  const PlanarTree t = PlanarTree::linear(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_skeleton(t));
}
BENCHMARK(BM_BuildLinear)->DenseRange(4, 7);

static void BM_BuildCorolla(benchmark::State& state) {
  const PlanarTree t = PlanarTree::corolla(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_skeleton(t));
}
BENCHMARK(BM_BuildCorolla)->DenseRange(2, 5);

static void BM_Morse(benchmark::State& state) {
  const Operahedron op = build_skeleton(PlanarTree::linear(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(morse_certificate(op.complex(), op.orientation()));
}
BENCHMARK(BM_Morse)->DenseRange(4, 7);

static void BM_Homology(benchmark::State& state) {
  const Operahedron op = build_skeleton(PlanarTree::linear(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(homology(op.complex()));
}
BENCHMARK(BM_Homology)->DenseRange(4, 6);

static void BM_PentagonLegs(benchmark::State& state) {
  const OperadExpression obj = maclane_parse("((ab)c)d");
  const MorphismWord w1 = parse_word(obj, "beta@ beta@");
  const MorphismWord w2 = parse_word(obj, "beta@L beta@ beta@R");
  CoherenceContext ctx(expression_to_nesting(obj).tree);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.decide(w1, w2));
}
BENCHMARK(BM_PentagonLegs);

static void BM_LodayRealization(benchmark::State& state) {
  const Operahedron op = build_skeleton(PlanarTree::linear(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(loday_realization(op));
}
BENCHMARK(BM_LodayRealization)->DenseRange(4, 7);

BENCHMARK_MAIN();
