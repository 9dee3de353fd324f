#include <benchmark/benchmark.h>

#include "rpm/airy.hpp"
#include "rpm/hankel.hpp"
#include "rpm/riccati.hpp"

namespace {

void BM_Coefficients(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(rpm::coefficients(rpm::WeightSpec::box_walls(), {1}, rpm::required_n_max(dim, 0)));
}
BENCHMARK(BM_Coefficients)->Arg(8)->Arg(16)->Arg(24);

void BM_HankelEval(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto table = rpm::coefficients(rpm::WeightSpec::box_walls(), {1}, rpm::required_n_max(dim, 0));
  const rpm::HankelEvaluator ev(table, {dim, 0});
  const int digits = rpm::default_digits(dim);
  const rpm::BigFloat eps("10.37", rpm::Precision::digits(digits + 20));
  for (auto _ : state) benchmark::DoNotOptimize(ev(eps, digits));
}
BENCHMARK(BM_HankelEval)->Arg(8)->Arg(16);

void BM_HankelPolynomial(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto table = rpm::coefficients(rpm::WeightSpec::box_walls(), {1}, rpm::required_n_max(dim, 0));
  for (auto _ : state) benchmark::DoNotOptimize(rpm::hankel_polynomial(table, {dim, 0}));
}
BENCHMARK(BM_HankelPolynomial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_IsolateRoots(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto table = rpm::coefficients(rpm::WeightSpec::box_walls(), {1}, rpm::required_n_max(dim, 0));
  for (auto _ : state) benchmark::DoNotOptimize(rpm::isolate_roots(table, {dim, 0}, 0, 200, rpm::default_digits(dim)));
}
BENCHMARK(BM_IsolateRoots)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Airy(benchmark::State& state) {
  const rpm::BigFloat z(-static_cast<long>(state.range(0)), rpm::Precision::digits(60));
  for (auto _ : state) benchmark::DoNotOptimize(rpm::airy(z, 40));
}
BENCHMARK(BM_Airy)->Arg(2)->Arg(40)->Arg(150);

void BM_BoundedOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rpm::oracle_eigenvalues(rpm::Model::Bounded, 1, 4, 40));
}
BENCHMARK(BM_BoundedOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
