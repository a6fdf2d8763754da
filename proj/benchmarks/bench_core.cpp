#include <benchmark/benchmark.h>

#include <cstdint>

#include "smoothsum/arith.hpp"
#include "smoothsum/asymptotic.hpp"
#include "smoothsum/dickman.hpp"
#include "smoothsum/euler_products.hpp"
#include "smoothsum/oracle.hpp"
#include "smoothsum/test_function.hpp"

using namespace smoothsum;

static void BM_Enumerate(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  const PrimeSet primes = sieve_primes(N);
  for (auto _ : state) {
    std::uint64_t seen = 0;
    enumerate_kfree_smooth(primes, 2, 3.0 * std::log(static_cast<double>(N)),
                           [&](const SmoothElement&) { ++seen; });
    benchmark::DoNotOptimize(seen);
  }
}
BENCHMARK(BM_Enumerate)->Arg(30)->Arg(100)->Arg(300);

static void BM_BruteS(benchmark::State& state) {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const SumParams p{{0.5, 0.5}, 2, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(brute_S(p, g, default_u_cutoff(g)).value);
}
BENCHMARK(BM_BruteS)->Arg(30)->Arg(60);

static void BM_GProduct(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  const auto primes = shared_primes(N);
  const auto view = primes->view_up_to(N);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_product(view, {0.5, 0.5}, 3, {1.0, 0.7}).value);
  }
}
BENCHMARK(BM_GProduct)->Arg(1000)->Arg(100000);

static void BM_HInfinite(benchmark::State& state) {
  const HInfinite h({1.5, -0.5}, 2);
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h({1.0, tau}).value);
    tau += 1e-3;
  }
}
BENCHMARK(BM_HInfinite);

static void BM_RhoHat(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho_hat(x).value);
    x += 1e-3;
  }
}
BENCHMARK(BM_RhoHat);

static void BM_ExactIntegral(benchmark::State& state) {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const SumParams p{1.0, 2, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(exact_integral(p, g).value);
}
BENCHMARK(BM_ExactIntegral)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_MainTerm(benchmark::State& state) {
  const auto g = TestFunction::gaussian(1.0, 0.4);
  const SumParams p{{0.5, 0.5}, 2, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(main_term(p, g).value);
}
BENCHMARK(BM_MainTerm)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
