#include "doctest.h"
#include "kgtrade/bignum.hpp"
#include "kgtrade/hash.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("bytes");

TEST_CASE("writer reader round trip") {
    ByteWriter w;
    w.u8(7);
    w.u32(0xdeadbeef);
    w.u64(0x0102030405060708ull);
    w.blob(std::string("hello"));
    w.raw(std::string("xy"));
    Bytes buf = w.take();

    ByteReader r(buf);
    CHECK(r.u8() == 7);
    CHECK(r.u32() == 0xdeadbeef);
    CHECK(r.u64() == 0x0102030405060708ull);
    CHECK(r.blob_str() == "hello");
    CHECK(r.raw(2) == Bytes{'x', 'y'});
    CHECK(r.done());
}

TEST_CASE("big-endian layout") {
    ByteWriter w;
    w.u32(1);
    CHECK(w.bytes() == Bytes{0, 0, 0, 1});
}

TEST_CASE("truncation throws") {
    Bytes buf{0, 0};
    ByteReader r(buf);
    CHECK_THROWS_AS(r.u32(), Error);
}

TEST_CASE("hex round trip") {
    Bytes b{0x00, 0xff, 0x10, 0xab};
    CHECK(to_hex(b) == "00ff10ab");
    CHECK(from_hex("00ff10ab") == b);
    CHECK_THROWS_AS(from_hex("0g"), Error);
    CHECK_THROWS_AS(from_hex("abc"), Error);
}

TEST_CASE("sha256 known vector") {
    // FIPS 180-2 test vector for "abc".
    CHECK(to_hex(sha256(to_bytes("abc"))) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(to_hex(sha256(Bytes{})) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("hmac-sha256 known vector") {
    // RFC 4231 test case 2.
    Bytes key = to_bytes("Jefe");
    Bytes msg = to_bytes("what do ya want for nothing?");
    CHECK(to_hex(hmac_sha256(key, msg)) ==
          "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843");
}

TEST_CASE("bignum arithmetic") {
    Bn a(91);
    Bn b(35);
    CHECK(a.add(b) == Bn(126));
    CHECK(a.sub(b) == Bn(56));
    CHECK(a.mul(b) == Bn(3185));
    CHECK(a.mod(b) == Bn(21));
    CHECK(a.gcd(b) == Bn(7));
    CHECK(Bn(3).mod_exp(Bn(4), Bn(100)) == Bn(81));
    CHECK(Bn(3).mod_inverse(Bn(7)) == Bn(5));
    CHECK_THROWS_AS(Bn(2).mod_inverse(Bn(4)), ParamError);
}

TEST_CASE("bignum byte round trip") {
    Bn v = Bn::from_hex("0102ff");
    CHECK(v.to_bytes() == Bytes{0x01, 0x02, 0xff});
    CHECK(v.to_fixed_bytes(5) == Bytes{0, 0, 0x01, 0x02, 0xff});
    CHECK(Bn::from_bytes(v.to_bytes()) == v);
    CHECK(v.to_hex() == "0102FF");
}

TEST_CASE("rand_range stays in bounds") {
    Bn bound(1000);
    for (int i = 0; i < 100; ++i) {
        Bn r = Bn::rand_range(bound);
        CHECK(r < bound);
    }
}

TEST_SUITE_END();
