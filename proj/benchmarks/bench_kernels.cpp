#include "hopfchern/connection.hpp"
#include "hopfchern/fredholm.hpp"
#include "hopfchern/quantumhopf.hpp"

#include <benchmark/benchmark.h>

using namespace hopfchern;

namespace {

const RF kHalf(BigRational(1, 2));

// (α + γ)^n in normal form, built by repeated normal-form products.
void BM_NormalFormPower(benchmark::State& state) {
  const Presentation& u = qsu2();
  const NCPolynomial x = gen(u, "alpha") + gen(u, "gamma*");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf_pow(x, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_NormalFormPower)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_QuotientBasis(benchmark::State& state) {
  const bool symbolic = state.range(1) != 0;
  const RF s = symbolic ? RF::var(Var::s) : kHalf;
  for (auto _ : state) benchmark::DoNotOptimize(quotient_basis(s, static_cast<int>(state.range(0))));
  state.SetLabel(symbolic ? "symbolic" : "s=1/2");
}
BENCHMARK(BM_QuotientBasis)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PairingHeegaard(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pairing(Family::heegaard, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PairingHeegaard)->DenseRange(-4, 4, 2)->Unit(benchmark::kMillisecond);

void BM_PairingPodles(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pairing(Family::podles, static_cast<int>(state.range(0)), kHalf));
}
BENCHMARK(BM_PairingPodles)->DenseRange(-3, 3, 3)->Unit(benchmark::kMillisecond);

void BM_NumericPairing(benchmark::State& state) {
  const ParamPoint at = {{Var::p, BigRational(1, 3)}, {Var::q, BigRational(1, 2)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_pairing(Family::heegaard, 2, at, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_NumericPairing)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_IdempotentSquare(benchmark::State& state) {
  const IdempotentMatrix e = idempotent(ell_family1(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(idempotent_defect(e));
}
BENCHMARK(BM_IdempotentSquare)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
