#include <benchmark/benchmark.h>

#include "linleg/classes.hpp"
#include "linleg/oracle.hpp"
#include "linleg/stable.hpp"

namespace {

const linleg::Direction kVertical = linleg::Direction::from(1, 0, 0);

void BM_BuildQuotient(benchmark::State& state) {
  const auto cs = linleg::ContactStructure::make(state.range(0));
  const auto depth = state.range(1);
  for (auto _ : state) {
    auto q = linleg::oracle::build_quotient(cs, kVertical, depth);
    benchmark::DoNotOptimize(q.node_count());
  }
}
BENCHMARK(BM_BuildQuotient)->Args({1, 6})->Args({3, 6})->Args({3, 10})->Args({4, 14});

void BM_VerifyAgainstClosedForm(benchmark::State& state) {
  const auto cs = linleg::ContactStructure::make(2);
  const auto d = linleg::Direction::from(1, 2, 3);
  for (auto _ : state) {
    auto report = linleg::oracle::verify_against_closed_form(cs, d, state.range(0));
    benchmark::DoNotOptimize(report.ok());
  }
}
BENCHMARK(BM_VerifyAgainstClosedForm)->Arg(6)->Arg(10);

void BM_EnumerateRange(benchmark::State& state) {
  const auto cs = linleg::ContactStructure::make(3);
  for (auto _ : state) {
    auto rows = linleg::enumerate_range(cs, kVertical, -state.range(0));
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_EnumerateRange)->Arg(10)->Arg(100);

void BM_StabilizeChain(benchmark::State& state) {
  const auto cs = linleg::ContactStructure::make(4);
  for (auto _ : state) {
    linleg::LegendrianClass c = linleg::VerticalMax{3};
    for (int i = 0; i < 64; ++i)
      c = linleg::stabilize(cs, c, i % 3 == 0 ? linleg::Sign::Minus : linleg::Sign::Plus);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_StabilizeChain);

}  // namespace

BENCHMARK_MAIN();
