#include "jetcalc/actions.hpp"
#include "jetcalc/contact.hpp"
#include "jetcalc/oracle.hpp"
#include "jetcalc/sampling.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace jetcalc;

Dims dims_for(const benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  return {m, m + 2};
}

void BM_ComposeP(benchmark::State& state) {
  Sampler s(1);
  const int m = static_cast<int>(state.range(0));
  const PrincipalJetElement a = s.principal(m), b = s.principal(m);
  for (auto _ : state) benchmark::DoNotOptimize(compose_P(a, b));
}
BENCHMARK(BM_ComposeP)->DenseRange(1, 4);

void BM_InverseP(benchmark::State& state) {
  Sampler s(2);
  const PrincipalJetElement a = s.principal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_P(a));
}
BENCHMARK(BM_InverseP)->DenseRange(1, 4);

void BM_ActPDouble(benchmark::State& state) {
  Sampler s(3);
  const Dims d = dims_for(state);
  const DoubleVelocity dv = s.double_velocity(d);
  const PrincipalJetElement p = s.principal(d.m);
  for (auto _ : state) benchmark::DoNotOptimize(act_P_double(dv, p));
}
BENCHMARK(BM_ActPDouble)->DenseRange(1, 4);

void BM_ActOracle(benchmark::State& state) {
  Sampler s(4);
  const Dims d = dims_for(state);
  const oracle::BiPolyMap x = oracle::to_bipoly(s.double_velocity(d));
  const PrincipalJetElement p = s.principal(d.m);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::act_oracle(x, p));
}
BENCHMARK(BM_ActOracle)->DenseRange(1, 3);

void BM_DoubleContactOf(benchmark::State& state) {
  Sampler s(5);
  const DoubleVelocity dv = s.chart_admissible(dims_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(double_contact_of(dv));
}
BENCHMARK(BM_DoubleContactOf)->DenseRange(1, 4);

void BM_VerticalQuotient(benchmark::State& state) {
  Sampler s(6);
  const DoubleVelocity dv = s.vertical(dims_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(vertical_quotient(dv));
}
BENCHMARK(BM_VerticalQuotient)->DenseRange(1, 4);

void BM_DecomposeContact(benchmark::State& state) {
  Sampler s(7);
  const DoubleContactElement d = double_contact_of(s.semiholonomic(dims_for(state)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_contact(d));
}
BENCHMARK(BM_DecomposeContact)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
