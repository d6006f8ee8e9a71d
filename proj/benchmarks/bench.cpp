#include <benchmark/benchmark.h>

#include "wreathmac/apply.hpp"
#include "wreathmac/eigen.hpp"
#include "wreathmac/interp.hpp"
#include "wreathmac/linalg.hpp"
#include "wreathmac/symfunc.hpp"
#include "wreathmac/wreath.hpp"

using namespace wreathmac;

namespace {

// the memo caches would hide the work, so each iteration builds fresh objects

void BM_SymbolicImage(benchmark::State& state) {
  DimVector N{2, 2};
  auto keys = monomial_basis_keys(N, 3);
  for (auto _ : state) {
    SymbolicOperator op(wreath_terms(0, N), N);
    for (const auto& k : keys) benchmark::DoNotOptimize(op.image_of_monomial(k));
  }
}
BENCHMARK(BM_SymbolicImage)->Unit(benchmark::kMillisecond);

void BM_InterpolatedMatrix(benchmark::State& state) {
  DimVector N = state.range(0) == 0 ? DimVector{2, 2} : DimVector{3, 5};
  int degree = state.range(0) == 0 ? 3 : 2;
  for (auto _ : state) benchmark::DoNotOptimize(InterpolatedOperator(wreath_terms(0, N), N).matrix(degree));
}
BENCHMARK(BM_InterpolatedMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Hhat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto F = fiber(Partition{}, 2, n);
  for (auto _ : state)
    for (const auto& lam : F) benchmark::DoNotOptimize(compute_Hhat(lam, 2));
}
BENCHMARK(BM_Hhat)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Kernel(benchmark::State& state) {
  Partition lam{3, 1};
  DimVector N = auto_dimension_vector(lam, 2, 2);
  QTMatrix M = operator_matrix(OperatorKind::Wreath, 0, N, 2);
  QTMatrix A = M - scaled(identity(M.size()), eigenvalue(lam, 0, N, 2));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(A));
}
BENCHMARK(BM_Kernel)->Unit(benchmark::kMillisecond);

void BM_Twist(benchmark::State& state) {
  TensorSymFunc s = TensorSymFunc::unit(3, Basis::Schur, MultiPartition::parse("2,1;1;", 3));
  for (auto _ : state) benchmark::DoNotOptimize(convert_basis(plethystic_twist(s, QTScalar::q()), Basis::Schur));
}
BENCHMARK(BM_Twist)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
