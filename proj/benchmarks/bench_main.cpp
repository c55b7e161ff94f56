#include <benchmark/benchmark.h>

#include <random>

#include "urysohn/convexity.hpp"
#include "urysohn/eppa.hpp"
#include "urysohn/hull.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/probe.hpp"

using namespace urysohn;

static void BM_QuotientSearchPath(benchmark::State& state) {
  const auto space = make_path(static_cast<int>(state.range(0)));
  QuotientBudget budget;
  budget.max_omega = 16;
  budget.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(search_witness_quotient(space, budget));
}
BENCHMARK(BM_QuotientSearchPath)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_KatetovEnumeration(benchmark::State& state) {
  const auto space = make_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_katetov(space, DistanceValueSet::integers(1), 6));
}
BENCHMARK(BM_KatetovEnumeration)->Arg(3)->Arg(5)->Arg(7);

static void BM_HullSeparation(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int dim = static_cast<int>(state.range(0));
  std::vector<std::vector<double>> a(16, std::vector<double>(dim)), b(16, std::vector<double>(dim));
  for (auto& v : a) for (auto& x : v) x = u(rng);
  for (auto& v : b) for (auto& x : v) x = 2.0 + u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hull_separation(a, b));
}
BENCHMARK(BM_HullSeparation)->Arg(2)->Arg(8)->Arg(32);

static void BM_ModulusConvexity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(modulus_convexity(3.0, 3, {0.5, 1.0, 1.5}));
}
BENCHMARK(BM_ModulusConvexity)->Unit(benchmark::kMillisecond);

static void BM_ConvexityProbe(benchmark::State& state) {
  const auto witness = build_sphere_witness(6, 2, static_cast<int>(state.range(0)));
  const auto realization = realize_t_epsilon(witness);
  const auto embedding = kuratowski_coordinates(realization.space, witness.fragment.size());
  for (auto _ : state) benchmark::DoNotOptimize(convexity_probe(witness, realization, embedding, "", 1));
}
BENCHMARK(BM_ConvexityProbe)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
