#include <random>

#include "doctest.h"
#include "kgtrade/graphgen.hpp"
#include "kgtrade/ot.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("ot");

namespace {

const BlindKeyPair& test_key() {
    static BlindKeyPair key = keygen(1024);
    return key;
}

Partition test_partition(size_t statements, size_t n, uint64_t seed) {
    KnowledgeGraph g = generate_graph({.statements = statements, .seed = seed});
    return partition_random(g, n, seed);
}

}  // namespace

TEST_CASE("part envelope round trip and integrity") {
    Partition parts = test_partition(40, 2, 51);
    SymKey key{};
    key[0] = 1;
    CbcIv iv{};
    iv[0] = 2;
    size_t len = common_plaintext_length(parts);
    PartEnvelope env = encrypt_part(parts.parts[0], key, iv, len);
    CHECK(env.ciphertext.size() % 16 == 0);

    auto plain = decrypt_part(env, key);
    REQUIRE(plain.has_value());
    CHECK(plain->statements() == parts.parts[0]);

    SymKey wrong = key;
    wrong[5] ^= 1;
    CHECK(!decrypt_part(env, wrong).has_value());

    PartEnvelope tampered = env;
    tampered.ciphertext[20] ^= 1;
    CHECK(!decrypt_part(tampered, key).has_value());
}

TEST_CASE("all envelopes share one ciphertext length") {
    Partition parts = test_partition(90, 4, 52);
    auto [setup, secrets] = seller_prepare(parts, test_key(), 7);
    REQUIRE(setup.envelopes.size() == 4);
    for (const PartEnvelope& env : setup.envelopes)
        CHECK(env.ciphertext.size() == setup.envelopes[0].ciphertext.size());
    // Nonces are pairwise distinct.
    for (size_t i = 0; i < setup.nonces.size(); ++i)
        for (size_t j = i + 1; j < setup.nonces.size(); ++j)
            CHECK(!(setup.nonces[i] == setup.nonces[j]));
}

TEST_CASE("chosen parts are recovered exactly") {
    const BlindKeyPair& key = test_key();
    Partition parts = test_partition(60, 4, 53);
    auto [setup, secrets] = seller_prepare(parts, key, 11);

    std::vector<size_t> indices = {0, 2};
    auto [request, bsecrets] = buyer_request(indices, setup);
    OTResponse resp = seller_respond(request, secrets, setup, key);
    std::vector<RecoveredPart> recovered = buyer_recover(resp, bsecrets, setup);

    REQUIRE(recovered.size() == 2);
    for (size_t j = 0; j < 2; ++j) {
        CHECK(recovered[j].integrity_ok);
        CHECK(recovered[j].index == indices[j]);
        CHECK(recovered[j].statements.statements() ==
              parts.parts[secrets.permutation[indices[j]]]);
    }
}

TEST_CASE("non-chosen envelopes stay sealed") {
    const BlindKeyPair& key = test_key();
    Partition parts = test_partition(50, 4, 54);
    auto [setup, secrets] = seller_prepare(parts, key, 12);
    std::vector<size_t> indices = {1};
    auto [request, bsecrets] = buyer_request(indices, setup);
    OTResponse resp = seller_respond(request, secrets, setup, key);

    size_t mod_bytes = setup.pub.modulus_bytes();
    for (uint32_t t = 0; t < 4; ++t) {
        if (t == 1) continue;
        // The only key the Buyer can derive for envelope t from request 0.
        SymKey guess = resp.masked[0][t];
        SymKey mask = ot_mask(bsecrets.blind[0], mod_bytes, t, 0);
        for (size_t b = 0; b < guess.size(); ++b) guess[b] ^= mask[b];
        CHECK(!decrypt_part(setup.envelopes[t], guess).has_value());
    }
}

TEST_CASE("buyer_choose draws distinct in-range indices") {
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<size_t> idx = buyer_choose(3, 8);
        REQUIRE(idx.size() == 3);
        std::set<size_t> uniq(idx.begin(), idx.end());
        CHECK(uniq.size() == 3);
        for (size_t i : idx) CHECK(i < 8);
    }
    CHECK_THROWS_AS(buyer_choose(5, 4), ParamError);
    CHECK_THROWS_AS(buyer_choose(0, 4), ParamError);
}

TEST_CASE("shuffle permutation depends on the seed") {
    const BlindKeyPair& key = test_key();
    Partition parts = test_partition(60, 6, 55);
    auto [s1, sec1] = seller_prepare(parts, key, 1);
    auto [s2, sec2] = seller_prepare(parts, key, 1);
    auto [s3, sec3] = seller_prepare(parts, key, 2);
    CHECK(sec1.permutation == sec2.permutation);
    CHECK(sec1.permutation != sec3.permutation);
}

TEST_SUITE_END();
