#include <benchmark/benchmark.h>

#include "kgtrade/blindsig.hpp"

using namespace kgtrade;

namespace {

const BlindKeyPair& key(int bits) {
    static BlindKeyPair k1024 = keygen(1024);
    static BlindKeyPair k2048 = keygen(2048);
    return bits == 1024 ? k1024 : k2048;
}

void BM_Fdh(benchmark::State& state) {
    PublicKey pub = key(int(state.range(0))).pub();
    Bytes m = to_bytes("fdh benchmark input");
    for (auto _ : state) benchmark::DoNotOptimize(fdh(m, pub.n));
}

void BM_SignDirect(benchmark::State& state) {
    const BlindKeyPair& k = key(int(state.range(0)));
    Bytes m = to_bytes("signing benchmark input");
    for (auto _ : state) benchmark::DoNotOptimize(sign_direct(m, k));
    state.SetItemsProcessed(int64_t(state.iterations()));
}

void BM_BlindUnblind(benchmark::State& state) {
    const BlindKeyPair& k = key(int(state.range(0)));
    PublicKey pub = k.pub();
    Bytes m = to_bytes("blinding benchmark input");
    for (auto _ : state) {
        BlindingFactor r = make_blinding_factor(pub);
        Signature s = unblind(sign_blinded(blind(m, r, pub), k), r, pub);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(int64_t(state.iterations()));
}

void BM_Verify(benchmark::State& state) {
    const BlindKeyPair& k = key(int(state.range(0)));
    Bytes m = to_bytes("verify benchmark input");
    Signature s = sign_direct(m, k);
    PublicKey pub = k.pub();
    for (auto _ : state) benchmark::DoNotOptimize(verify(m, s, pub));
}

}  // namespace

BENCHMARK(BM_Fdh)->Arg(1024)->Arg(2048);
BENCHMARK(BM_SignDirect)->Arg(1024)->Arg(2048);
BENCHMARK(BM_BlindUnblind)->Arg(1024)->Arg(2048);
BENCHMARK(BM_Verify)->Arg(1024)->Arg(2048);
