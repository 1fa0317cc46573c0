#include <benchmark/benchmark.h>

#include "dualsomos/elliptic.hpp"
#include "dualsomos/hankel.hpp"
#include "dualsomos/laurent_check.hpp"
#include "dualsomos/shadow.hpp"
#include "dualsomos/somos.hpp"

using namespace dualsomos;

static void BM_DualOrbit(benchmark::State& state) {
  const SomosParams p(1, dual_parse("1+1e"));
  for (auto _ : state) {
    SomosOrbit o(p, -1, {1, 1, 1, 1});
    o.extend(-1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(o.at(o.hi()));
  }
}
BENCHMARK(BM_DualOrbit)->Arg(16)->Arg(64)->Arg(256);

static void BM_SymbolicOrbit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_orbit(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SymbolicOrbit)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ShadowBasis(benchmark::State& state) {
  const SomosOrbit o = classical_orbit(static_cast<int>(state.range(0)) + 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_shadow_basis(o, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ShadowBasis)->Arg(12)->Arg(40);

static void BM_HankelDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MomentSeq m = moments({dual_parse("1+1e"), 1, dual_parse("1+1/2e"), 1, dual_parse("-1/2e")}, 2 * n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(hankel_det(m, n));
}
BENCHMARK(BM_HankelDet)->Arg(4)->Arg(10)->Arg(20);

static void BM_Wp(benchmark::State& state) {
  const Lattice<Complex> L(Complex(4), Complex(-1));
  const Complex z(0.37, 0.21);
  for (auto _ : state) benchmark::DoNotOptimize(L.wp(z));
}
BENCHMARK(BM_Wp);

static void BM_DualWp(benchmark::State& state) {
  const Lattice<DualComplex> L(DualComplex(Complex(4), Complex(1)), DualComplex(Complex(-1), Complex(0.5)));
  const DualComplex z(Complex(0.37, 0.21), Complex(1, 0));
  for (auto _ : state) benchmark::DoNotOptimize(L.wp(z));
}
BENCHMARK(BM_DualWp);

static void BM_SigmaVerification(benchmark::State& state) {
  const SomosOrbit o = classical_orbit(16);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sigma_solution(o, -1, 12));
}
BENCHMARK(BM_SigmaVerification)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
