#include <benchmark/benchmark.h>

#include "hav/dist_algebra.hpp"

namespace {

void BM_HeisenbergPowers(benchmark::State& state) {
  auto h = hav::catalog("heisenberg", {{"scale_p", 3}});
  auto n = static_cast<std::size_t>(state.range(0));
  auto y = hav::TruncatedPBWSeries::generator(h, 2 * n + 1, 1);
  auto x = hav::TruncatedPBWSeries::generator(h, 2 * n + 1, 0);
  auto yn = hav::TruncatedPBWSeries::one(h, 2 * n + 1), xn = yn;
  for (std::size_t i = 0; i < n; ++i) {
    yn = hav::pbw_multiply(yn, y);
    xn = hav::pbw_multiply(xn, x);
  }
  for (auto _ : state) {
    auto p = hav::pbw_multiply(yn, xn);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_HeisenbergPowers)->DenseRange(2, 8, 2);

void BM_Sl2Straightening(benchmark::State& state) {
  auto g = hav::catalog("sl2");
  auto n = static_cast<unsigned>(state.range(0));
  auto f = hav::TruncatedPBWSeries::monomial(g, 2 * n + 1, {0, 0, n}, hav::Rational(1));
  auto e = hav::TruncatedPBWSeries::monomial(g, 2 * n + 1, {0, n, 0}, hav::Rational(1));
  for (auto _ : state) {
    auto p = hav::pbw_multiply(f, e);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Sl2Straightening)->DenseRange(1, 5, 1);

void BM_GradedCheck(benchmark::State& state) {
  auto h = hav::catalog("heisenberg", {{"scale_p", 3}});
  auto param = hav::RadiusParam::make(3, hav::Rational(3, 4));
  for (auto _ : state) {
    auto r = hav::graded_polynomial_check(h, param, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GradedCheck)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
