// Serial reference against the OpenMP kernel on h-polynomial matrices of the
// sizes that occur in tensor-power checks (V⊗V⊗V for N = 2..4).

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sjord/kernels.hpp"

namespace {

using sjord::HPoly;
using sjord::Rational;

std::vector<HPoly> random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::bernoulli_distribution nonzero(0.3);
  std::vector<HPoly> m(n * n);
  for (auto& x : m)
    if (nonzero(rng)) x = HPoly({Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng))});
  return m;
}

template <bool Parallel>
void BM_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) {
    std::vector<HPoly> c(n * n);
    if constexpr (Parallel)
      sjord::kernels::matmul_parallel<HPoly>(a, b, c, n);
    else
      sjord::kernels::matmul_serial<HPoly>(a, b, c, n);
    benchmark::DoNotOptimize(c.data());
  }
  state.counters["threads"] = Parallel ? sjord::kernels::max_threads() : 1;
}

}  // namespace

BENCHMARK(BM_matmul<false>)->Name("matmul/serial")->Arg(27)->Arg(64)->Arg(125)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul<true>)->Name("matmul/openmp")->Arg(27)->Arg(64)->Arg(125)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
