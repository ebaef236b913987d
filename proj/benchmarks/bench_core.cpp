#include <benchmark/benchmark.h>

#include "hmmeb/bounds.hpp"
#include "hmmeb/entropy.hpp"
#include "hmmeb/estimator.hpp"
#include "hmmeb/markov.hpp"
#include "hmmeb/oracle.hpp"

namespace {

using namespace hmmeb;

void BM_binary_entropy_inv(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-6;
    if (t > 1.0) t = 1e-6;
    benchmark::DoNotOptimize(binary_entropy_inv(t));
  }
}
BENCHMARK(BM_binary_entropy_inv);

void BM_beta_symmetric_series(benchmark::State& state) {
  const double lambda = 1.0 / state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_symmetric(0.11, lambda));
  }
}
BENCHMARK(BM_beta_symmetric_series)->Arg(2)->Arg(100)->Arg(10000);

void BM_beta_symmetric_direct(benchmark::State& state) {
  const double lambda = 1.0 / state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        beta_symmetric(0.11, lambda, BetaMethod::direct));
  }
}
BENCHMARK(BM_beta_symmetric_direct)->Arg(2)->Arg(100)->Arg(10000);

void BM_forward_entropy(benchmark::State& state) {
  const auto chain = ChainSpec::symmetric(0.11);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_output_entropy(chain, 0.11, n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_forward_entropy)->Arg(10)->Arg(14)->Arg(18);

void BM_projected_closed(benchmark::State& state) {
  const auto chain = ChainSpec::symmetric(0.11);
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(projected_entropy_finite(chain, 0.6084, n));
  }
}
BENCHMARK(BM_projected_closed)->Arg(100)->Arg(10000);

void BM_estimator(benchmark::State& state) {
  const auto chain = ChainSpec::symmetric(0.11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_entropy_rate(chain, 0.11, 100000, 1000, 1, 1, 1));
  }
}
BENCHMARK(BM_estimator);

}  // namespace

BENCHMARK_MAIN();
