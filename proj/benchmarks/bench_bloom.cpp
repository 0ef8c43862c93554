#include <benchmark/benchmark.h>

#include "kgtrade/bloom.hpp"

using namespace kgtrade;

namespace {

Bytes item(uint64_t i) {
    Bytes b(8);
    for (int j = 7; j >= 0; --j) {
        b[j] = uint8_t(i & 0xff);
        i >>= 8;
    }
    return b;
}

void BM_BloomInsert(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    for (auto _ : state) {
        BloomFilter f(optimal_params(n, 1e-9, {}));
        for (uint64_t i = 0; i < n; ++i) f.insert(item(i));
        benchmark::DoNotOptimize(f.popcount());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}

void BM_BloomQuery(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    BloomFilter f(optimal_params(n, 1e-9, {}));
    for (uint64_t i = 0; i < n; ++i) f.insert(item(i));
    uint64_t q = 0;
    for (auto _ : state) benchmark::DoNotOptimize(f.contains(item(q++ % (2 * n))));
    state.SetItemsProcessed(int64_t(state.iterations()));
}

void BM_CountingInsert(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    for (auto _ : state) {
        CountingBloomFilter f(counting_params(n, 1e-6, {}));
        for (uint64_t i = 0; i < n; ++i) f.insert(item(i), uint32_t(i % 7 + 1));
        benchmark::DoNotOptimize(f.total());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}

}  // namespace

BENCHMARK(BM_BloomInsert)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(BM_BloomQuery)->Arg(100000);
BENCHMARK(BM_CountingInsert)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
