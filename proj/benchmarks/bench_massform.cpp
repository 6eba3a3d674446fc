#include <benchmark/benchmark.h>

#include <random>

#include "massform/battery.hpp"
#include "massform/local_model.hpp"
#include "massform/local_volumes.hpp"
#include "massform/mass.hpp"
#include "massform/order_zeta.hpp"

using namespace massform;

namespace {

RamificationData rank_r_example(std::int64_t q, int r) {
    return drinfeld_data(FunctionFieldData::rational(q), r, 1);
}

void BM_Mass(benchmark::State& state) {
    const auto data = rank_r_example(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mass(data));
    }
}
BENCHMARK(BM_Mass)->Arg(2)->Arg(4)->Arg(8);

void BM_OrderZetaAtZero(benchmark::State& state) {
    const auto data = rank_r_example(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(order_zeta_at_zero(data));
    }
}
BENCHMARK(BM_OrderZetaAtZero)->Arg(2)->Arg(4)->Arg(8);

void BM_OrderZetaSeries(benchmark::State& state) {
    const auto data = rank_r_example(2, 3);
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(order_zeta_series(data, order));
    }
}
BENCHMARK(BM_OrderZetaSeries)->Arg(8)->Arg(12)->Arg(20);

void BM_TheoremBattery(benchmark::State& state) {
    const auto battery = theorem_battery();
    for (auto _ : state) {
        for (const auto& data : battery) {
            benchmark::DoNotOptimize(order_zeta_at_zero(data) + mass(data).mass);
        }
    }
    state.counters["configurations"] = static_cast<double>(battery.size());
}
BENCHMARK(BM_TheoremBattery)->Unit(benchmark::kMillisecond);

void BM_PhiMultiplicativity(benchmark::State& state) {
    const auto model = LocalModel::make(3, static_cast<int>(state.range(0)), 1);
    std::mt19937_64 rng(1);
    const auto x = model.random_element(rng);
    const auto y = model.random_element(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.phi(x) * model.phi(y));
    }
}
BENCHMARK(BM_PhiMultiplicativity)->Arg(2)->Arg(3)->Arg(4);

void BM_SublatticeBruteForce(benchmark::State& state) {
    const auto ell = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sublattice_count_bruteforce(2, 2, ell));
    }
}
BENCHMARK(BM_SublatticeBruteForce)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
