#include <benchmark/benchmark.h>

#include <vector>

#include "pdnet/pdnet.hpp"

using namespace pdnet;

namespace {

// Hilbert-like Hermitian PD matrix with a small imaginary perturbation off
// the diagonal, so every stage works with genuine Gaussian rationals.
Matrix sample_pd(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational re(1, static_cast<long>(i + j + 1));
      if (i == j) m(i, j) = GaussianRational(re + 1);
      else if (i < j) m(i, j) = GaussianRational(re, Rational(1, static_cast<long>(4 * (j - i) + 4)));
      else m(i, j) = GaussianRational(re, Rational(-1, static_cast<long>(4 * (i - j) + 4)));
    }
  }
  return m;
}

void BM_MinorLaplace(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Matrix m = sample_pd(n);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_laplace(m));
}
BENCHMARK(BM_MinorLaplace)->DenseRange(2, 6);

void BM_MinorBareiss(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Matrix m = sample_pd(n);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_bareiss(m));
}
BENCHMARK(BM_MinorBareiss)->DenseRange(2, 10, 2);

void BM_FactorizeGeneral(benchmark::State& state) {
  const Matrix m = sample_pd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factorize_general(m));
}
BENCHMARK(BM_FactorizeGeneral)->DenseRange(2, 6);

void BM_FactorizeLduForm(benchmark::State& state) {
  const Matrix m = sample_pd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factorize_ldu_form(m));
}
BENCHMARK(BM_FactorizeLduForm)->DenseRange(2, 6);

void BM_WeightMatrix(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PlanarNetwork net = network_from_factors(factorize_ldu_form(sample_pd(n)), n);
  for (auto _ : state) benchmark::DoNotOptimize(weight_matrix(net));
}
BENCHMARK(BM_WeightMatrix)->DenseRange(2, 6);

void BM_MinorLgv(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PlanarNetwork net = network_from_factors(factorize_ldu_form(sample_pd(n)), n);
  const IndexSet all = leading_set(n);
  for (auto _ : state) benchmark::DoNotOptimize(minor_lgv(net, all, all));
}
BENCHMARK(BM_MinorLgv)->DenseRange(2, 5);

void BM_PdOracle(benchmark::State& state) {
  const Matrix m = sample_pd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pd_oracle(m));
}
BENCHMARK(BM_PdOracle)->DenseRange(2, 6);

void BM_PdNetwork(benchmark::State& state) {
  const Matrix m = sample_pd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pd_check_network(m));
}
BENCHMARK(BM_PdNetwork)->DenseRange(2, 6);

void BM_PdCluster(benchmark::State& state) {
  const Matrix m = sample_pd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pd_check_cluster(m, 2));
}
BENCHMARK(BM_PdCluster)->DenseRange(2, 4);

void BM_Explore(benchmark::State& state) {
  const Seed start = wiring_seed(standard_pd_diagram(3), sample_pd(3));
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(explore(start, depth));
}
BENCHMARK(BM_Explore)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
