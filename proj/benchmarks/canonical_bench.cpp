#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "tropical/canonical.hpp"
#include "tropical/factorization.hpp"
#include "tropical/text.hpp"

namespace {

using tropical::ExtendedRational;
using tropical::TropPoly;

TropPoly random_integer_poly(std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1'000'000, 1'000'000);
  std::vector<ExtendedRational> coeffs;
  coeffs.reserve(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) coeffs.emplace_back(coeff(rng));
  return TropPoly(0, std::move(coeffs));
}

void BM_Canonicalize(benchmark::State& state) {
  const TropPoly f = random_integer_poly(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(tropical::canonicalize(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(10)->Range(10, 100'000)
    ->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oN);

void BM_CanonicalizeNaive(benchmark::State& state) {
  const TropPoly f = random_integer_poly(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(tropical::canonicalize_naive(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CanonicalizeNaive)->RangeMultiplier(2)->Range(8, 128)
    ->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oNCubed);

void BM_Factor(benchmark::State& state) {
  const TropPoly f = random_integer_poly(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(tropical::factor(f));
}
BENCHMARK(BM_Factor)->Arg(1'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_PolyMul(benchmark::State& state) {
  const TropPoly f = random_integer_poly(state.range(0), 3);
  const TropPoly g = random_integer_poly(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(tropical::poly_mul(f, g));
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_ParseFormat(benchmark::State& state) {
  const std::string text = tropical::format(random_integer_poly(state.range(0), 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tropical::format(tropical::parse_poly(text)));
  }
}
BENCHMARK(BM_ParseFormat)->Arg(1'000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
