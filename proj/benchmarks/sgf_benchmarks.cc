#include <benchmark/benchmark.h>

#include "sgf/fibonacci.h"
#include "sgf/genfun.h"
#include "sgf/realroots.h"
#include "sgf/recursive.h"
#include "sgf/word_stream.h"

namespace {

void BM_SturmChain(benchmark::State& state) {
  const sgf::Polynomial p = sgf::pair_polynomials(static_cast<unsigned>(state.range(0))).t;
  for (auto _ : state) {
    sgf::SturmChain chain(p);
    benchmark::DoNotOptimize(chain);
  }
}
BENCHMARK(BM_SturmChain)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PositivityBound(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgf::positivity_bound(static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_PositivityBound)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FixedWordStream(benchmark::State& state) {
  const sgf::Substitution s = sgf::fibonacci_substitution();
  const sgf::FixedPointSeed seed = sgf::fixed_point_seed(s);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    sgf::FixedWordStream stream(s, seed);
    char last = 0;
    for (std::size_t i = 0; i < n; ++i) last = stream.next();
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}
BENCHMARK(BM_FixedWordStream)->Arg(1 << 16)->Arg(1 << 20);

void BM_CharSeries(benchmark::State& state) {
  const sgf::Substitution s = sgf::fibonacci_substitution();
  const sgf::FixedPointSeed seed = sgf::fixed_point_seed(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgf::char_series(s, seed, 'a', static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CharSeries)->Arg(10000)->Arg(100000);

void BM_Recursion(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    sgf::RecursivePolynomials r(sgf::fibonacci_substitution());
    benchmark::DoNotOptimize(r.char_poly('a', 'a', level));
  }
}
BENCHMARK(BM_Recursion)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
