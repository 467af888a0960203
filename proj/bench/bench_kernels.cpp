#include <benchmark/benchmark.h>

#include "taut/abclasses.hpp"
#include "taut/drcycle.hpp"
#include "taut/integrate.hpp"
#include "taut/pairing.hpp"

using namespace taut;

namespace {

void clear_caches() {
    clear_pairing_cache();
    clear_product_cache();
    clear_dr_cache();
    clear_integral_cache();
}

// Pairing of a genus-two B-class against its whole complementary spanning set.
void pairing_sweep(benchmark::State& state, bool parallel) {
    TautClass x = b_class({2, {1, 1, 1}});
    std::vector<TautClass> tests;
    for (const Stratum& s : decorated_strata(x.ambient, x.ambient.dimension() - 3)) tests.push_back(single(s));
    for (auto _ : state) {
        clear_caches();
        benchmark::DoNotOptimize(pair_all(x, tests, parallel));
    }
    state.counters["tests"] = static_cast<double>(tests.size());
}

// Tree sum behind the A-class, with per-tree DR constructions in parallel or in order.
void a_tilde_sum(benchmark::State& state, bool parallel) {
    int g = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1)), n = static_cast<int>(state.range(2));
    for (auto _ : state) {
        clear_caches();
        benchmark::DoNotOptimize(a_tilde(g, m, n, parallel));
    }
}

}  // namespace

BENCHMARK_CAPTURE(pairing_sweep, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pairing_sweep, parallel, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(a_tilde_sum, serial, false)->Args({2, 1, 3})->Args({1, 3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(a_tilde_sum, parallel, true)->Args({2, 1, 3})->Args({1, 3, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
