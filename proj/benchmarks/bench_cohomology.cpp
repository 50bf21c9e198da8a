#include <benchmark/benchmark.h>

#include "hav/cohomology.hpp"

namespace {

void BM_AbelianBetti(benchmark::State& state) {
  auto g = hav::catalog("abelian", {{"n", state.range(0)}});
  auto v = hav::trivial_module(g);
  for (auto _ : state) {
    auto dims = hav::betti_numbers(hav::build_complex(v, hav::Direction::Cochain));
    benchmark::DoNotOptimize(dims);
  }
}
BENCHMARK(BM_AbelianBetti)->DenseRange(2, 6, 2);

void BM_HeisenbergAdjoint(benchmark::State& state) {
  auto g = hav::catalog("heisenberg", {{"m", state.range(0)}});
  auto v = hav::adjoint_module(g);
  for (auto _ : state) {
    auto dims = hav::betti_numbers(hav::build_complex(v, hav::Direction::Cochain));
    benchmark::DoNotOptimize(dims);
  }
}
BENCHMARK(BM_HeisenbergAdjoint)->Arg(1)->Arg(2);

void BM_BorelDecomposition(benchmark::State& state) {
  auto L = hav::named_field("sqrt2");
  auto b0 = hav::catalog_borel(state.range(0) == 2 ? "borel_sl2" : "borel_sl3");
  hav::BorelData b{hav::base_change(b0.algebra, hav::Embedding::from_rationals(L)), b0.toral_dim};
  auto iota = hav::Embedding::identity(L);
  auto chi = hav::zero_character(hav::ambient_algebra(b.algebra, iota));
  for (auto _ : state) {
    auto rep = hav::hs_decomposition_check(b, iota, chi);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_BorelDecomposition)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
