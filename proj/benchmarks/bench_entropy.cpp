#include <benchmark/benchmark.h>

#include "kgtrade/entropy.hpp"
#include "kgtrade/graphgen.hpp"

using namespace kgtrade;

namespace {

void BM_DeriveMultiset(benchmark::State& state) {
    GraphGenConfig gc;
    gc.statements = size_t(state.range(0));
    gc.seed = 9;
    KnowledgeGraph g = generate_graph(gc);
    for (auto _ : state)
        benchmark::DoNotOptimize(derive_multiset(g, EntropyMetricId::PRED_OBJ_DESC));
    state.SetItemsProcessed(int64_t(state.iterations()) * state.range(0));
}

void BM_ShannonEntropy(benchmark::State& state) {
    GraphGenConfig gc;
    gc.statements = size_t(state.range(0));
    gc.seed = 10;
    Multiset ms = derive_multiset(generate_graph(gc), EntropyMetricId::PRED_OBJ_DESC);
    for (auto _ : state) benchmark::DoNotOptimize(shannon_entropy(ms));
}

void BM_MergedEntropy(benchmark::State& state) {
    static BlindKeyPair key = keygen(1024);
    GraphGenConfig gc;
    gc.statements = size_t(state.range(0));
    gc.seed = 11;
    GraphPair pair = generate_pair(gc, 0.5);
    EntropyMetricId metric = EntropyMetricId::PRED_OBJ_DESC;
    CountingBloomFilter f =
        seller_build_counting_filter(derive_multiset(pair.seller, metric), key, 1e-6, {});
    std::map<std::string, Signature> sigs;
    Multiset buyer_ms = derive_multiset(pair.buyer, metric);
    for (auto& [element, _] : buyer_ms.counts())
        sigs.emplace(element, sign_direct(to_bytes(element), key));
    KnowledgeGraph inter = graph_intersection(pair.buyer, pair.seller);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            buyer_merged_entropy(pair.buyer, &inter, metric, f, sigs, key.pub()));
}

}  // namespace

BENCHMARK(BM_DeriveMultiset)->Arg(1000)->Arg(10000);
BENCHMARK(BM_ShannonEntropy)->Arg(10000);
BENCHMARK(BM_MergedEntropy)->Arg(1000);
