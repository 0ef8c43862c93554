#include <cmath>
#include <random>

#include "doctest.h"
#include "kgtrade/bloom.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("bloom");

namespace {

FilterSeed test_seed(uint8_t tag = 0) {
    FilterSeed s{};
    s[0] = 0xa5;
    s[15] = tag;
    return s;
}

Bytes item(uint64_t i) {
    Bytes b(8);
    for (int j = 7; j >= 0; --j) {
        b[j] = uint8_t(i & 0xff);
        i >>= 8;
    }
    return b;
}

}  // namespace

TEST_CASE("optimal parameter formula") {
    // m = ceil(-n ln p / (ln 2)^2), k = max(1, round((m/n) ln 2)).
    FilterParams p = optimal_params(1000, 0.01);
    CHECK(p.m == uint64_t(std::ceil(-1000.0 * std::log(0.01) /
                                    (std::log(2.0) * std::log(2.0)))));
    CHECK(p.k == uint32_t(std::max(1.0, std::round(double(p.m) / 1000.0 * std::log(2.0)))));
    CHECK(optimal_params(1, 0.5).k >= 1);
    CHECK_THROWS_AS(optimal_params(1000, 0.0), ParamError);
    CHECK_THROWS_AS(optimal_params(1000, 1.5), ParamError);
}

TEST_CASE("counting parameters grow linearly") {
    FilterParams a = counting_params(1000, 1e-6);
    FilterParams b = counting_params(2000, 1e-6);
    CHECK(a.k == 1);
    CHECK(a.m >= uint64_t(1000.0 / std::sqrt(2e-6)));
    CHECK(double(b.m) / double(a.m) == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("hash positions are deterministic and seed-sensitive") {
    FilterParams p{1 << 20, 7, test_seed()};
    Bytes it = item(42);
    CHECK(hash_positions(p, it) == hash_positions(p, it));
    for (uint64_t pos : hash_positions(p, it)) CHECK(pos < p.m);
    FilterParams p2 = p;
    p2.seed = test_seed(1);
    CHECK(hash_positions(p, it) != hash_positions(p2, it));
}

TEST_CASE("no false negatives") {
    BloomFilter f(optimal_params(500, 1e-3, test_seed()));
    for (uint64_t i = 0; i < 500; ++i) f.insert(item(i));
    for (uint64_t i = 0; i < 500; ++i) CHECK(f.contains(item(i)));
    CHECK(f.inserted() == 500);
}

TEST_CASE("encode decode round trip") {
    BloomFilter f(optimal_params(100, 1e-4, test_seed(3)));
    for (uint64_t i = 0; i < 100; ++i) f.insert(item(i));
    BloomFilter g = BloomFilter::decode(f.encode());
    CHECK(g == f);
    CHECK(g.encode() == f.encode());
}

TEST_CASE("cardinality estimate at design load") {
    BloomFilter f(optimal_params(2000, 1e-3, test_seed(4)));
    for (uint64_t i = 0; i < 2000; ++i) f.insert(item(i));
    CHECK(f.estimate_cardinality() == doctest::Approx(2000).epsilon(0.05));
}

TEST_CASE("noise sets extra bits deterministically") {
    BloomFilter f(optimal_params(200, 1e-3, test_seed(5)));
    for (uint64_t i = 0; i < 200; ++i) f.insert(item(i));
    uint64_t before = f.popcount();
    BloomFilter g = f;
    f.add_noise(0.05, 99);
    g.add_noise(0.05, 99);
    CHECK(f == g);
    uint64_t extra = uint64_t(std::ceil(0.05 * double(f.params().m)));
    CHECK(f.popcount() >= before);
    CHECK(f.popcount() <= before + extra);
    CHECK(f.popcount() > before);  // overwhelmingly likely at this fill level
    for (uint64_t i = 0; i < 200; ++i) CHECK(f.contains(item(i)));
}

TEST_CASE("counting filter count query is exact without collisions") {
    CountingBloomFilter f(counting_params(100, 1e-6, test_seed(6)));
    for (uint64_t i = 0; i < 100; ++i) f.insert(item(i), uint32_t(i % 5 + 1));
    uint64_t total = 0;
    for (uint64_t i = 0; i < 100; ++i) {
        CHECK(f.count_query(item(i)) == uint32_t(i % 5 + 1));
        total += i % 5 + 1;
    }
    CHECK(f.total() == total);
    CHECK(f.count_query(item(100000)) == 0);
}

TEST_CASE("counting filter round trip") {
    CountingBloomFilter f(counting_params(50, 1e-6, test_seed(7)));
    for (uint64_t i = 0; i < 50; ++i) f.insert(item(i), 3);
    CountingBloomFilter g = CountingBloomFilter::decode(f.encode());
    CHECK(g == f);
}

TEST_CASE("counter overflow is a hard error") {
    CountingBloomFilter f(FilterParams{4, 1, test_seed(8)});
    f.insert(item(1), 0xffffffffu);
    CHECK_THROWS_AS(f.insert(item(1), 1), Error);
}

TEST_SUITE_END();
