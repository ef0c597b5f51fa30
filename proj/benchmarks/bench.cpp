#include <benchmark/benchmark.h>

#include "wittknot/knots.hpp"
#include "wittknot/pretzel.hpp"

namespace {

using namespace wittknot;

void BM_DiagonalizeY(benchmark::State& state) {
  RatMatrix y = to_rational(standard_matrices(state.range(0)).y);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonalize(y));
  }
}
BENCHMARK(BM_DiagonalizeY)->Arg(8)->Arg(16)->Arg(32);

void BM_ClosedFormWittClass(benchmark::State& state) {
  PretzelKnot k = classify({9, -7, 5, -3, 8});
  for (auto _ : state) {
    benchmark::DoNotOptimize(witt_closed_form(k));
  }
}
BENCHMARK(BM_ClosedFormWittClass);

void BM_DirectWittClass(benchmark::State& state) {
  PretzelKnot k = classify({9, -7, 5, -3, 8});
  RatMatrix s = symmetrize(seifert_matrix(k));
  for (auto _ : state) {
    DiagonalForm d = diagonalize(s);
    benchmark::DoNotOptimize(WittClassQ::from_diagonal(d.entries));
  }
}
BENCHMARK(BM_DirectWittClass);

void BM_WittEquals(benchmark::State& state) {
  WittClassQ a = witt_closed_form(classify({21, 13, -17, -15, 12}));
  WittClassQ b = witt_closed_form(classify({-3, -5, 7, 9, 6}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.equals(b));
  }
}
BENCHMARK(BM_WittEquals);

void BM_Alexander(benchmark::State& state) {
  PretzelKnot k = classify({9, -7, 5, -3, 8});
  Knot knot(k.name(), seifert_matrix(k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexander(knot));
  }
}
BENCHMARK(BM_Alexander);

void BM_Factor(benchmark::State& state) {
  BigInt n = BigInt(1000003) * BigInt(1000033);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor(n));
  }
}
BENCHMARK(BM_Factor);

void BM_TristramLevine(benchmark::State& state) {
  PretzelKnot k = classify({5, -3, 8});
  Knot knot(k.name(), seifert_matrix(k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tristram_levine(knot, 0.0, 1.0));
  }
}
BENCHMARK(BM_TristramLevine);

}  // namespace

BENCHMARK_MAIN();
