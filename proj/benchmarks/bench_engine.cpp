#include "uniflip/ppoly.hpp"
#include "uniflip/reptheory.hpp"

#include <benchmark/benchmark.h>

#include <memory>

using namespace uniflip;

namespace {

const char* const kTypes[] = {"B2", "G2", "B3", "D4", "F4"};

void BM_WeylGroup(benchmark::State& state) {
    const auto rs = std::make_shared<const RootSystem>(build_root_system(CartanType::parse(kTypes[state.range(0)])));
    for (auto _ : state) benchmark::DoNotOptimize(WeylGroup(rs).order());
    state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_WeylGroup)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_FakeDegrees(benchmark::State& state) {
    const auto rs = std::make_shared<const RootSystem>(build_root_system(CartanType::parse(kTypes[state.range(0)])));
    const WeylGroup w(rs);
    const WeylCharacters t = character_table(w);
    for (auto _ : state)
        for (std::size_t c = 0; c < t.num_chars(); ++c) benchmark::DoNotOptimize(fake_degree(t, c));
    state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_FakeDegrees)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Engine(benchmark::State& state) {
    const auto ctx = TypeContext::load(CartanType::parse(kTypes[state.range(0)]), UNIFLIP_BENCH_DATA_DIR);
    for (auto _ : state) {
        PolynomialEngine e(ctx, static_cast<unsigned>(state.range(1)));
        benchmark::DoNotOptimize(e.orbits().size());
    }
    state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_Engine)->ArgsProduct({{0, 1, 2, 3, 4}, {1, 8}})->Unit(benchmark::kMillisecond);

void BM_SignSweep(benchmark::State& state) {
    const PolynomialEngine e(TypeContext::load(CartanType::parse(kTypes[state.range(0)]), UNIFLIP_BENCH_DATA_DIR), 8);
    for (auto _ : state) benchmark::DoNotOptimize(verify_sign_theorem(e).checks.size());
    state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_SignSweep)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SeriesDivide(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Poly q;
    for (std::size_t i = 0; i <= n; ++i) q += Poly::monomial(Rational(static_cast<long>(i % 7) - 3, 2), i);
    Poly d = Poly::constant(1) - Poly::monomial(1, 1) + Poly::monomial(Rational(1, 3), 2);
    const std::size_t order = series_guard_order(n);
    const TruncatedSeries den(d, order), num(q * d, order);
    for (auto _ : state) benchmark::DoNotOptimize(series_divide_exact(num, den, n));
}
BENCHMARK(BM_SeriesDivide)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
