// Block kernels of the partial zeta sums: serial enumeration, OpenMP
// enumeration, and the subspace-polynomial recursion, on blocks of the
// genus-2 fixture with growing lower dimension.

#include <benchmark/benchmark.h>

#include "drinfeld/checks.hpp"
#include "drinfeld/ideal.hpp"
#include "drinfeld/zeta_kernels.hpp"

using namespace drinfeld;

namespace {

kernels::BlockInput make_block(int lower_dim, long long n, int prec) {
  static ModelPtr model = CurveModel::create(builtin_fixture("genus2"));
  const CurveModel& m = *model;
  SignData signs(m);
  FracIdeal unit = FracIdeal::unit(m);
  DegreeBasis basis = degree_basis(unit, 3 * lower_dim + 8, signs);
  int ep = prec + 8 * static_cast<int>(n);
  kernels::BlockInput in{&m.constants(), embed_at_infinity(basis.vectors.at(lower_dim).value, ep), {}, n, prec};
  for (int k = 0; k < lower_dim; ++k) in.lower.push_back(embed_at_infinity(basis.vectors[k].value, ep));
  return in;
}

void BM_serial(benchmark::State& st) {
  auto in = make_block(static_cast<int>(st.range(0)), 8, 60);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::inverse_power_sum_serial(in));
}

void BM_parallel(benchmark::State& st) {
  auto in = make_block(static_cast<int>(st.range(0)), 8, 60);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::inverse_power_sum_parallel(in));
  st.counters["threads"] = kernels::max_threads();
}

void BM_subspace(benchmark::State& st) {
  auto in = make_block(static_cast<int>(st.range(0)), 8, 60);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::inverse_power_sum_subspace(in));
}

}  // namespace

BENCHMARK(BM_serial)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subspace)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
