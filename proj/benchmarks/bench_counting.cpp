#include <benchmark/benchmark.h>

#include "ksand/counting/closed_form.hpp"
#include "ksand/counting/counting.hpp"
#include "ksand/surfaces/catalog.hpp"

using namespace ksand;

namespace {

// Fixed moduli so runs are comparable; (3, 5, 7) is generic for every p used here.
constexpr std::uint64_t kA = 3, kB = 5, kC = 7;

void closed_form(benchmark::State& state, Kernel k) {
  PrimeFieldCtx ctx(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_count(kA, kB, kC, ctx, k));
  state.SetComplexityN(state.range(0));
}

void BM_Naive(benchmark::State& s) { closed_form(s, Kernel::Naive); }
void BM_Convolution(benchmark::State& s) { closed_form(s, Kernel::Convolution); }
void BM_Ntt(benchmark::State& s) { closed_form(s, Kernel::Ntt); }

void BM_CharacterSum(benchmark::State& state) {
  PrimeFieldCtx ctx(static_cast<std::uint64_t>(state.range(0)));
  auto cover = catalog_double_cover("LEGENDRE17", {Rational(long(kA)), Rational(long(kB)), Rational(long(kC))});
  for (auto _ : state) benchmark::DoNotOptimize(character_sum_count(cover, ctx, int(state.range(1))));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Naive)->Arg(101)->Arg(211)->Arg(401)->Arg(809)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convolution)->Arg(101)->Arg(1009)->Arg(10007)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ntt)->Arg(101)->Arg(1009)->Arg(10007)->Arg(100003)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterSum)
    ->Args({101, 1})
    ->Args({1009, 1})
    ->Args({1009, 4})
    ->Args({4001, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
