#include <benchmark/benchmark.h>

#include <rhosym/linalg.hpp>
#include <rhosym/random.hpp>
#include <rhosym/rho.hpp>
#include <rhosym/spectral.hpp>
#include <rhosym/symmetry.hpp>

using namespace rhosym;

namespace {

void BM_HermitianEig(benchmark::State& state) {
  Rng rng(1);
  const Matrix m = random_hermitian(rng, static_cast<std::size_t>(state.range(0)), Field::complex);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Svd(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(rng, n, n, Field::complex);
  for (auto _ : state) benchmark::DoNotOptimize(svd(m));
}
BENCHMARK(BM_Svd)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_RhoOperator(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix t = random_matrix(rng, n, n, Field::complex);
  const Matrix a = random_matrix(rng, n, n, Field::complex);
  RhoOptions opts;
  opts.full_sweep = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(rho_operator(t, a, opts));
}
BENCHMARK(BM_RhoOperator)->ArgsProduct({{2, 4, 8}, {0, 1}});

void BM_NumericalRange(benchmark::State& state) {
  Rng rng(4);
  const Matrix a = random_matrix(rng, 4, 4, Field::complex);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numerical_range(a, samples));
}
BENCHMARK(BM_NumericalRange)->Arg(64)->Arg(256)->Arg(1024);

void BM_LeftWitness(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix t = random_matrix(rng, n, n, Field::complex);
  for (auto _ : state) benchmark::DoNotOptimize(left_witness(t));
}
BENCHMARK(BM_LeftWitness)->Arg(2)->Arg(3)->Arg(6);

void BM_RightWitness(benchmark::State& state) {
  Rng rng(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix t = random_matrix(rng, n, n, Field::complex);
  for (auto _ : state) benchmark::DoNotOptimize(right_witness(t));
}
BENCHMARK(BM_RightWitness)->Arg(2)->Arg(3)->Arg(6);

void BM_ProbeRight(benchmark::State& state) {
  const Matrix t = Matrix::from_rows({{0.6, -0.8}, {0.8, 0.6}});
  ProbeOptions opts;
  opts.trials = 50;
  for (auto _ : state) benchmark::DoNotOptimize(probe_right_symmetry(t, opts));
}
BENCHMARK(BM_ProbeRight);

}  // namespace

BENCHMARK_MAIN();
