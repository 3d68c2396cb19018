#include <benchmark/benchmark.h>

#include "ffc/arith.hpp"
#include "ffc/criteria.hpp"
#include "ffc/fermat_quotient.hpp"
#include "ffc/quad_field.hpp"
#include "ffc/wendt.hpp"

using namespace ffc;

static void BM_ModMul(benchmark::State& state) {
  const Modulus m((u64{1} << 61) - 1);
  u64 x = 123456789;
  for (auto _ : state) {
    x = mod_mul(x, x + 1, m);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_ModMul);

static void BM_MontgomeryMul(benchmark::State& state) {
  const Montgomery mont((u64{1} << 61) - 1);
  u64 x = mont.to_mont(123456789);
  for (auto _ : state) {
    x = mont.mul(x, x + 1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_MontgomeryMul);

static void BM_IsPrime(benchmark::State& state) {
  u64 n = (u64{1} << 61) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(n));
}
BENCHMARK(BM_IsPrime);

static void BM_WendtDivides(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  const u64 q = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(wendt_divides(n, q));
}
BENCHMARK(BM_WendtDivides)->Args({40, 761})->Args({1000, 3001});

static void BM_WendtExact(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wendt_exact(n));
}
BENCHMARK(BM_WendtExact)->Arg(12)->Arg(24)->Arg(40);

static void BM_Condition1Direct(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(condition1_holds(p));
}
BENCHMARK(BM_Condition1Direct)->Arg(9689)->Arg(99989);

static void BM_Condition1Scanner(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  FermatQuotientScanner scanner(p);
  for (auto _ : state) benchmark::DoNotOptimize(scanner.condition1_holds(p));
}
BENCHMARK(BM_Condition1Scanner)->Arg(9689)->Arg(99989);

static void BM_ClassNumber(benchmark::State& state) {
  const i64 d = -state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(class_number(d));
}
BENCHMARK(BM_ClassNumber)->Arg(1'000'003)->Arg(10'000'019);

BENCHMARK_MAIN();
