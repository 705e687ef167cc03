// Serial reference against the OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <map>

#include "unitred/discrepancy.hpp"
#include "unitred/lattice.hpp"
#include "unitred/minima.hpp"

using namespace unitred;

namespace {

struct WitnessLattice {
    PreparedLattice lattice;
    Rat bound;
};

const WitnessLattice& witness_lattice(u64 n) {
    static std::map<u64, WitnessLattice> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto [p, k] = prime_power(n);
        const CycloElement a = p == 2 ? witness_2power(k) : witness_ppower(p, k);
        const TraceLattice t = trace_lattice(a);
        it = cache.emplace(n, WitnessLattice{prepare_lattice(t.gram.scaled), trace(a) * t.gram.scale}).first;
    }
    return it->second;
}

void BM_EnumerateSerial(benchmark::State& state) {
    const auto& w = witness_lattice(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_below_serial(w.lattice, w.bound).vectors.size());
}

void BM_EnumerateParallel(benchmark::State& state) {
    const auto& w = witness_lattice(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_below(w.lattice, w.bound).vectors.size());
}

void BM_L75Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(l75_scan_serial(static_cast<u64>(state.range(0)), state.range(1)).checked);
}

void BM_L75Parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(l75_scan(static_cast<u64>(state.range(0)), state.range(1)).checked);
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(16)->Arg(9)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(16)->Arg(9)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_L75Serial)->Args({5, 3})->Args({7, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_L75Parallel)->Args({5, 3})->Args({7, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
