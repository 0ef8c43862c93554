#include <random>

#include "doctest.h"
#include "kgtrade/graphgen.hpp"
#include "kgtrade/psi.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("psi");

namespace {

const BlindKeyPair& test_key() {
    static BlindKeyPair key = keygen(1024);
    return key;
}

FilterSeed seed_of(uint8_t tag) {
    FilterSeed s{};
    s[0] = tag;
    return s;
}

}  // namespace

TEST_CASE("intersection equals the plaintext oracle") {
    GraphGenConfig gc;
    gc.statements = 200;
    gc.seed = 21;
    GraphPair pair = generate_pair(gc, 0.4);

    const BlindKeyPair& key = test_key();
    BloomFilter filter = seller_build_filter(pair.seller, key, 1e-9, seed_of(1));
    BlindRequests reqs = buyer_prepare_requests(pair.buyer, key.pub());
    std::vector<Signature> sigs;
    for (const Bn& b : reqs.blinded) sigs.push_back(Signature{sign_blinded(b, key)});
    for (size_t i = 0; i < reqs.secrets.size(); ++i)
        sigs[i] = unblind(sigs[i].s, reqs.secrets[i], key.pub());

    IntersectionResult result = buyer_compute_intersection(reqs, sigs, filter, key.pub());
    CHECK(result.statements == graph_intersection(pair.buyer, pair.seller));
    CHECK(result.filter_cardinality_estimate ==
          doctest::Approx(double(pair.seller.size())).epsilon(0.05));
}

TEST_CASE("disjoint and identical graphs") {
    GraphGenConfig gc;
    gc.statements = 80;
    gc.seed = 22;
    const BlindKeyPair& key = test_key();

    for (double overlap : {0.0, 1.0}) {
        GraphPair pair = generate_pair(gc, overlap);
        BloomFilter filter = seller_build_filter(pair.seller, key, 1e-9, seed_of(2));
        BlindRequests reqs = buyer_prepare_requests(pair.buyer, key.pub());
        std::vector<Signature> sigs;
        for (size_t i = 0; i < reqs.secrets.size(); ++i)
            sigs.push_back(unblind(sign_blinded(reqs.blinded[i], key), reqs.secrets[i],
                                   key.pub()));
        IntersectionResult result =
            buyer_compute_intersection(reqs, sigs, filter, key.pub());
        CHECK(result.statements == graph_intersection(pair.buyer, pair.seller));
    }
}

TEST_CASE("decoys do not change the result") {
    GraphGenConfig gc;
    gc.statements = 60;
    gc.seed = 23;
    GraphPair pair = generate_pair(gc, 0.5);
    const BlindKeyPair& key = test_key();
    BloomFilter filter = seller_build_filter(pair.seller, key, 1e-9, seed_of(3));

    BlindRequests reqs = buyer_prepare_requests(pair.buyer, key.pub(), 10);
    CHECK(reqs.blinded.size() == pair.buyer.size() + 10);
    CHECK(reqs.secrets.size() == pair.buyer.size());
    std::vector<Signature> sigs;
    for (const Bn& b : reqs.blinded) sigs.push_back(Signature{sign_blinded(b, key)});
    for (size_t i = 0; i < reqs.secrets.size(); ++i)
        sigs[i] = unblind(sigs[i].s, reqs.secrets[i], key.pub());
    IntersectionResult result = buyer_compute_intersection(reqs, sigs, filter, key.pub());
    CHECK(result.statements == graph_intersection(pair.buyer, pair.seller));
}

TEST_CASE("an invalid signature is seller misbehavior") {
    GraphGenConfig gc;
    gc.statements = 20;
    gc.seed = 24;
    GraphPair pair = generate_pair(gc, 0.5);
    const BlindKeyPair& key = test_key();
    BloomFilter filter = seller_build_filter(pair.seller, key, 1e-9, seed_of(4));
    BlindRequests reqs = buyer_prepare_requests(pair.buyer, key.pub());
    std::vector<Signature> sigs;
    for (size_t i = 0; i < reqs.secrets.size(); ++i)
        sigs.push_back(unblind(sign_blinded(reqs.blinded[i], key), reqs.secrets[i],
                               key.pub()));
    sigs[3].s = sigs[3].s.add(Bn(1)).mod(key.n);
    CHECK_THROWS_AS(buyer_compute_intersection(reqs, sigs, filter, key.pub()),
                    ProtocolError);
}

TEST_CASE("seller filter rebuild is byte identical") {
    GraphGenConfig gc;
    gc.statements = 50;
    gc.seed = 25;
    KnowledgeGraph g = generate_graph(gc);
    const BlindKeyPair& key = test_key();
    BloomFilter a = seller_build_filter(g, key, 1e-6, seed_of(5));
    BloomFilter b = seller_build_filter(g, key, 1e-6, seed_of(5));
    CHECK(a.encode() == b.encode());
}

TEST_SUITE_END();
