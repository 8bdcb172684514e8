#include <benchmark/benchmark.h>

#include "genusfield/arith.hpp"
#include "genusfield/genus.hpp"
#include "genusfield/represent.hpp"
#include "genusfield/verify.hpp"

using namespace genusfield;

static void BM_FactorSquarefree(benchmark::State& state) {
    // Product of two primes just above 10^9, beyond trial division.
    const std::int64_t d = 1'000'000'007LL * 1'000'000'009LL;
    for (auto _ : state) benchmark::DoNotOptimize(arith::factorize(static_cast<std::uint64_t>(d)));
}
BENCHMARK(BM_FactorSquarefree);

static void BM_QuarticSymbol(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(arith::quartic_symbol_two(999'961));
}
BENCHMARK(BM_QuarticSymbol);

static void BM_SolveGamma(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(represent::solve_gamma(5, p));
}
BENCHMARK(BM_SolveGamma)->Arg(13)->Arg(100'069)->Arg(1'000'000'021);

static void BM_SolvePi2(benchmark::State& state) {
    const std::int64_t ell = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(represent::solve_pi2(ell));
}
BENCHMARK(BM_SolvePi2)->Arg(41)->Arg(999'961);

static void BM_Construct(benchmark::State& state) {
    const std::int64_t d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(genus::construct(d));
}
BENCHMARK(BM_Construct)->Arg(65)->Arg(615)->Arg(3LL * 5 * 11 * 13 * 19 * 29 * 41);

static void BM_FullReport(benchmark::State& state) {
    const std::int64_t d = state.range(0);
    const auto f = arith::factor_squarefree(d);
    const auto g = genus::construct(f);
    for (auto _ : state) benchmark::DoNotOptimize(verify::full_report(g, f));
}
BENCHMARK(BM_FullReport)->Arg(65)->Arg(615)->Arg(5LL * 13 * 29 * 37 * 53);
BENCHMARK_MAIN();
