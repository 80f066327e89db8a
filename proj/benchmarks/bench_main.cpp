#include <benchmark/benchmark.h>

#include <random>

#include "wildstrat/orbit.hpp"
#include "wildstrat/quant.hpp"
#include "wildstrat/singmod.hpp"

using namespace wildstrat;
using liecore::RootDatum;

namespace {

Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

parab::ParabolicFiltration gl3_chain(const RootDatum& rd) {
  return parab::ParabolicFiltration{{parab::positive_borel(rd), parab::standard_parabolic(rd, 1u)}};
}

void BM_LeviPoset(benchmark::State& state) {
  RootDatum rd = RootDatum::parse(state.range(0) == 0 ? "gl3" : "B2");
  for (auto _ : state) benchmark::DoNotOptimize(strat::levi_poset(rd));
}
BENCHMARK(BM_LeviPoset)->Arg(0)->Arg(1);

void BM_EnumerateFiltrations(benchmark::State& state) {
  RootDatum rd = RootDatum::gl(3);
  for (auto _ : state) benchmark::DoNotOptimize(strat::enumerate_filtrations(rd, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateFiltrations)->DenseRange(1, 3);

void BM_BirkhoffNormalize(benchmark::State& state) {
  RootDatum rd = RootDatum::gl(3);
  int r = static_cast<int>(state.range(0));
  std::mt19937 gen(1);
  std::uniform_int_distribution<int> d(-3, 3);
  Vec flat = zero_vec(static_cast<std::size_t>(r) * rd.dim_g());
  for (auto& x : flat) x = d(gen);
  for (int b = 0; b < rd.dim_t(); ++b) flat[b] = b + 1;
  for (int b = rd.dim_t(); b < rd.dim_g(); ++b) flat[b] = 0;
  auto x = liecore::tc_from_flat(rd, r, flat);
  for (auto _ : state) benchmark::DoNotOptimize(orbit::birkhoff_normalize(rd, x));
}
BENCHMARK(BM_BirkhoffNormalize)->DenseRange(1, 3);

void BM_ShapovalovBlocks(benchmark::State& state) {
  RootDatum rd = RootDatum::gl(3);
  parab::FormalType lam{ints({1, 3, -2}), ints({4, 4, 1})};
  for (auto _ : state) {
    singmod::SingularityModule m(rd, gl3_chain(rd), lam);
    for (const auto& ws : m.weight_spaces(static_cast<int>(state.range(0))))
      benchmark::DoNotOptimize(singmod::shapovalov_block(m, ws));
  }
}
BENCHMARK(BM_ShapovalovBlocks)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_InverseShapovalov(benchmark::State& state) {
  RootDatum rd = RootDatum::gl(3);
  parab::FormalType lam{ints({1, 3, -2}), ints({4, 4, 1})};
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quant::inverse_shapovalov_series(rd, gl3_chain(rd), lam, n, n));
}
BENCHMARK(BM_InverseShapovalov)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Associativity(benchmark::State& state) {
  RootDatum rd = RootDatum::gl(3);
  parab::FormalType lam{ints({1, 3, -2}), ints({4, 4, 1})};
  auto F = quant::inverse_shapovalov_series(rd, gl3_chain(rd), lam, 2, 2);
  quant::V0Space v0(rd, gl3_chain(rd));
  for (auto _ : state) benchmark::DoNotOptimize(quant::associativity_check(F, v0, 2));
}
BENCHMARK(BM_Associativity)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
