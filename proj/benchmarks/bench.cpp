#include <benchmark/benchmark.h>

#include <random>

#include "trialg/checks.hpp"
#include "trialg/constructions.hpp"
#include "trialg/delta.hpp"
#include "trialg/functors.hpp"
#include "trialg/structure.hpp"

using namespace trialg;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(num(gen), den(gen));
  return m;
}

const TrialityAlgebra& d4() {
  static TrialityAlgebra cached = [] {
    D4Result r = make_d4();
    return make_triality(r.alg, r.act);
  }();
  return cached;
}

void BM_rref_30(benchmark::State& state) {
  Matrix m = random_matrix(30, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_30);

void BM_kernel_30x45(benchmark::State& state) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<long> num(-9, 9);
  Matrix m(30, 45);
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 45; ++j) m.at(i, j) = Scalar(num(gen));
  for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_kernel_30x45);

void BM_d4_construct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_d4());
}
BENCHMARK(BM_d4_construct);

void BM_d4_jacobi(benchmark::State& state) {
  const Algebra& L = d4().alg;
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(L));
}
BENCHMARK(BM_d4_jacobi);

void BM_d4_killing_rank(benchmark::State& state) {
  const Algebra& L = d4().alg;
  for (auto _ : state) benchmark::DoNotOptimize(rank(killing_form(L)));
}
BENCHMARK(BM_d4_killing_rank);

void BM_functor_F_d4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(functor_F(d4()));
}
BENCHMARK(BM_functor_F_d4);

void BM_roundtrip_d4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_check(d4()));
}
BENCHMARK(BM_roundtrip_d4);

void BM_derive_variety(benchmark::State& state) {
  LambdaAlgebra lam = make_lambda();
  std::vector<DeltaPoly> axioms = lie_axioms({0, 2});
  for (auto _ : state) benchmark::DoNotOptimize(derive_variety(axioms, lam.graded));
}
BENCHMARK(BM_derive_variety);

}  // namespace

BENCHMARK_MAIN();
