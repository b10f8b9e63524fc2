#include <benchmark/benchmark.h>

#include <quiverlab/approximation.hpp>
#include <quiverlab/fixtures.hpp>
#include <quiverlab/phantom.hpp>

using namespace quiverlab;

namespace {

AlgebraPtr ex2() { return fixtures::ex2_algebra(Field::rationals()); }

FamilyGenerator strings(const AlgebraPtr& a) {
  return [a](std::size_t n) {
    Representation m = fixtures::string_module(a, n).module;
    return FamilyMember{"M" + std::to_string(n), m, pdim(m)};
  };
}

void BM_HomSpace(benchmark::State& state) {
  AlgebraPtr a = ex2();
  auto n = static_cast<std::size_t>(state.range(0));
  Representation m = fixtures::string_module(a, n).module;
  Representation p = projective_module(a, 0);
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(m, p));
}
BENCHMARK(BM_HomSpace)->DenseRange(1, 6);

void BM_PdimNn(benchmark::State& state) {
  AlgebraPtr a = ex2();
  auto n = static_cast<std::size_t>(state.range(0));
  Representation m = build_Nn(a, a->path("beta"), a->path("alpha"), n).module;
  for (auto _ : state) benchmark::DoNotOptimize(pdim(m));
}
BENCHMARK(BM_PdimNn)->DenseRange(1, 5);

void BM_InfinitePdimS2(benchmark::State& state) {
  AlgebraPtr a = ex2();
  Representation s2 = simple_module(a, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pdim(s2));
}
BENCHMARK(BM_InfinitePdimS2);

void BM_GrowthScan(benchmark::State& state) {
  AlgebraPtr a = ex2();
  Representation s1 = simple_module(a, 0);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(approximation_growth_scan(strings(a), s1, n));
}
BENCHMARK(BM_GrowthScan)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_NaivePlusFitting(benchmark::State& state) {
  AlgebraPtr a = ex2();
  Representation s1 = simple_module(a, 0);
  FiniteCategory c;
  c.closure = kFinitePdim;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(state.range(0)); ++n) {
    Representation m = fixtures::string_module(a, n).module;
    c.add("M" + std::to_string(n), m, pdim(m));
  }
  for (auto _ : state) benchmark::DoNotOptimize(right_minimize(naive_approximation(c, s1)));
}
BENCHMARK(BM_NaivePlusFitting)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Tower(benchmark::State& state) {
  AlgebraPtr a = ex2();
  Representation s1 = simple_module(a, 0);
  TowerOptions o;
  o.budget = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phantom_tower(s1, strings(a), o));
}
BENCHMARK(BM_Tower)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
