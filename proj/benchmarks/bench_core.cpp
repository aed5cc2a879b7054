#include <benchmark/benchmark.h>

#include "nmsym/inequalities.hpp"
#include "nmsym/polyalgebra.hpp"
#include "nmsym/rng.hpp"

using namespace nmsym;

namespace {

SymPoint make_point(std::size_t n) {
  CounterRng rng(99, 0, n);
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.next_rational(1000, 20));
  return SymPoint(std::move(v));
}

void BM_sigma_all(benchmark::State& state) {
  SymPoint x = make_point(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_all(x));
}
BENCHMARK(BM_sigma_all)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_sigma_oracle(benchmark::State& state) {
  SymPoint x = make_point(static_cast<std::size_t>(state.range(0)));
  long long k = state.range(0) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(sigma_oracle(x, k));
}
BENCHMARK(BM_sigma_oracle)->Arg(8)->Arg(12)->Arg(16);

void BM_newton_gap(benchmark::State& state) {
  SymPoint x = make_point(static_cast<std::size_t>(state.range(0)));
  TwoShift spec{Scalar(Rational(3, 2)), Scalar(Rational(1, 3))};
  long long k = state.range(0) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(newton_gap(x, spec, k));
}
BENCHMARK(BM_newton_gap)->Arg(8)->Arg(16)->Arg(32);

void BM_maclaurin_chain(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  CounterRng rng(99, 1, n);
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i)
    v.emplace_back(Rational(rng.next_int(1, 1000), rng.next_int(1, 20)));
  SymPoint x(v);
  TwoShift spec{Scalar(1), Scalar(2)};
  for (auto _ : state)
    benchmark::DoNotOptimize(maclaurin_chain(x, spec, static_cast<long long>(n)));
}
BENCHMARK(BM_maclaurin_chain)->Arg(4)->Arg(8)->Arg(12);

void BM_sturm(benchmark::State& state) {
  SymPoint x = make_point(static_cast<std::size_t>(state.range(0)));
  UniPoly p = poly_from_roots(x);
  for (auto _ : state) benchmark::DoNotOptimize(sturm_real_roots(p));
}
BENCHMARK(BM_sturm)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_quartic_reduction(benchmark::State& state) {
  SymPoint x = make_point(static_cast<std::size_t>(state.range(0)));
  long long k = state.range(0) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(quartic_reduction(x, k));
}
BENCHMARK(BM_quartic_reduction)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
