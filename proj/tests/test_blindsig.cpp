#include <random>

#include "doctest.h"
#include "kgtrade/blindsig.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("blindsig");

namespace {

// Keygen is the slow part; share one key across the suite.
const BlindKeyPair& test_key() {
    static BlindKeyPair key = keygen(1024);
    return key;
}

Bytes random_msg(std::mt19937_64& rng) {
    size_t len = rng() % 64 + 1;
    Bytes b(len);
    for (auto& x : b) x = uint8_t(rng());
    return b;
}

}  // namespace

TEST_CASE("keygen sanity") {
    const BlindKeyPair& k = test_key();
    CHECK(k.n.num_bits() == 1024);
    CHECK(k.e == Bn(65537));
    CHECK(k.p.mul(k.q) == k.n);
    CHECK_THROWS_AS(keygen(512), ParamError);
}

TEST_CASE("fdh stays below the modulus and is deterministic") {
    const BlindKeyPair& k = test_key();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        Bytes m = random_msg(rng);
        Bn h = fdh(m, k.n);
        CHECK(h < k.n);
        CHECK(fdh(m, k.n) == h);
    }
    CHECK(!(fdh(to_bytes("a"), k.n) == fdh(to_bytes("b"), k.n)));
}

TEST_CASE("blind sign unblind equals direct signature") {
    const BlindKeyPair& k = test_key();
    PublicKey pub = k.pub();
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        Bytes m = random_msg(rng);
        BlindingFactor r = make_blinding_factor(pub);
        Signature s = unblind(sign_blinded(blind(m, r, pub), k), r, pub);
        CHECK(s == sign_direct(m, k));
        CHECK(verify(m, s, pub));
    }
}

TEST_CASE("verification rejects wrong message and wrong signature") {
    const BlindKeyPair& k = test_key();
    Signature s = sign_direct(to_bytes("msg"), k);
    CHECK(verify(to_bytes("msg"), s, k.pub()));
    CHECK(!verify(to_bytes("msh"), s, k.pub()));
    Signature bad = s;
    bad.s = bad.s.add(Bn(1)).mod(k.n);
    CHECK(!verify(to_bytes("msg"), bad, k.pub()));
}

TEST_CASE("signed digest parity between direct and blind paths") {
    const BlindKeyPair& k = test_key();
    PublicKey pub = k.pub();
    Bytes m = to_bytes("<http://ex.org/s> <http://ex.org/p> <http://ex.org/o>");
    BlindingFactor r = make_blinding_factor(pub);
    Signature via_blind = unblind(sign_blinded(blind(m, r, pub), k), r, pub);
    CHECK(signed_digest(m, via_blind, pub) == signed_digest(m, sign_direct(m, k), pub));
}

TEST_CASE("sign_batch preserves order across worker counts") {
    const BlindKeyPair& k = test_key();
    std::vector<Bn> blinded;
    for (int i = 0; i < 40; ++i) blinded.push_back(fdh(to_bytes(std::to_string(i)), k.n));
    std::vector<Bn> one = sign_batch(blinded, k, 1);
    std::vector<Bn> three = sign_batch(blinded, k, 3);
    REQUIRE(one.size() == blinded.size());
    CHECK(one == three);
    for (size_t i = 0; i < blinded.size(); ++i)
        CHECK(one[i] == blinded[i].mod_exp(k.d, k.n));
}

TEST_SUITE_END();
