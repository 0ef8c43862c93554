#include "kgtrade/bloom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "kgtrade/hash.hpp"

namespace kgtrade {

FilterParams optimal_params(uint64_t n, double p, const FilterSeed& seed) {
    if (n < 1) throw ParamError("expected insertions must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw ParamError("false-positive rate must be in (0,1)");
    const double ln2 = std::log(2.0);
    FilterParams fp;
    fp.m = uint64_t(std::ceil(-double(n) * std::log(p) / (ln2 * ln2)));
    fp.m = std::max<uint64_t>(fp.m, 1);
    fp.k = std::max<uint32_t>(1, uint32_t(std::llround(double(fp.m) / double(n) * ln2)));
    fp.seed = seed;
    return fp;
}

FilterParams counting_params(uint64_t n, double p, const FilterSeed& seed) {
    FilterParams fp = optimal_params(n, p, seed);
    fp.k = 1;
    uint64_t collision_m = uint64_t(std::ceil(double(n) / std::sqrt(2.0 * p)));
    fp.m = std::max(fp.m, collision_m);
    return fp;
}

std::vector<uint64_t> hash_positions(const FilterParams& params,
                                     std::span<const uint8_t> item) {
    Digest d = hmac_sha256(params.seed, item);
    uint64_t h1 = 0, h2 = 0;
    for (int i = 0; i < 8; ++i) h1 = h1 << 8 | d[i];
    for (int i = 8; i < 16; ++i) h2 = h2 << 8 | d[i];
    std::vector<uint64_t> out(params.k);
    for (uint32_t i = 0; i < params.k; ++i)
        out[i] = uint64_t((unsigned __int128)(h1) + (unsigned __int128)(i) * h2) % params.m;
    return out;
}

BloomFilter::BloomFilter(FilterParams params)
    : params_(params), bits_((params.m + 7) / 8, 0) {
    if (params_.m < 1 || params_.k < 1) throw ParamError("invalid filter params");
}

uint64_t BloomFilter::popcount() const {
    uint64_t n = 0;
    for (uint8_t b : bits_) n += std::popcount(b);
    return n;
}

void BloomFilter::insert(std::span<const uint8_t> item) {
    for (uint64_t pos : hash_positions(params_, item)) set_bit(pos);
    ++inserted_;
}

bool BloomFilter::contains(std::span<const uint8_t> item) const {
    for (uint64_t pos : hash_positions(params_, item))
        if (!get_bit(pos)) return false;
    return true;
}

void BloomFilter::add_noise(double fraction, uint64_t rng_seed) {
    if (!(fraction >= 0.0 && fraction < 1.0)) throw ParamError("noise fraction must be in [0,1)");
    uint64_t extra = uint64_t(std::ceil(fraction * double(params_.m)));
    if (extra == 0) return;
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<uint64_t> dist(0, params_.m - 1);
    std::set<uint64_t> chosen;
    while (chosen.size() < extra) chosen.insert(dist(rng));
    for (uint64_t pos : chosen) set_bit(pos);
}

double BloomFilter::estimate_cardinality() const {
    uint64_t pc = popcount();
    if (pc >= params_.m) throw Error("filter saturated, cardinality estimate unavailable");
    double fill = double(pc) / double(params_.m);
    return -(double(params_.m) / double(params_.k)) * std::log1p(-fill);
}

Bytes BloomFilter::encode() const {
    ByteWriter w;
    w.u64(params_.m);
    w.u32(params_.k);
    w.raw(params_.seed);
    w.u64(inserted_);
    w.blob(bits_);
    return w.take();
}

BloomFilter BloomFilter::decode(std::span<const uint8_t> wire) {
    ByteReader r(wire);
    FilterParams p;
    p.m = r.u64();
    p.k = r.u32();
    Bytes seed = r.raw(16);
    std::copy(seed.begin(), seed.end(), p.seed.begin());
    BloomFilter f(p);
    f.inserted_ = r.u64();
    Bytes bits = r.blob();
    if (bits.size() != f.bits_.size()) throw Error("bloom filter bit array length mismatch");
    f.bits_ = std::move(bits);
    return f;
}

CountingBloomFilter::CountingBloomFilter(FilterParams params)
    : params_(params), counters_(params.m, 0) {
    if (params_.m < 1 || params_.k < 1) throw ParamError("invalid filter params");
}

void CountingBloomFilter::insert(std::span<const uint8_t> item, uint32_t multiplicity) {
    if (multiplicity < 1) throw ParamError("multiplicity must be >= 1");
    for (uint64_t pos : hash_positions(params_, item)) {
        uint64_t next = uint64_t(counters_[pos]) + multiplicity;
        if (next > UINT32_MAX) throw Error("counting filter counter overflow (undersized)");
        counters_[pos] = uint32_t(next);
    }
    total_ += multiplicity;
}

uint32_t CountingBloomFilter::count_query(std::span<const uint8_t> item) const {
    uint32_t mn = UINT32_MAX;
    for (uint64_t pos : hash_positions(params_, item)) mn = std::min(mn, counters_[pos]);
    return mn;
}

Bytes CountingBloomFilter::encode() const {
    ByteWriter w;
    w.u64(params_.m);
    w.u32(params_.k);
    w.raw(params_.seed);
    w.u64(total_);
    Bytes cells(counters_.size() * 4);
    for (size_t i = 0; i < counters_.size(); ++i) {
        uint32_t c = counters_[i];
        cells[4 * i] = uint8_t(c);
        cells[4 * i + 1] = uint8_t(c >> 8);
        cells[4 * i + 2] = uint8_t(c >> 16);
        cells[4 * i + 3] = uint8_t(c >> 24);
    }
    w.blob(cells);
    return w.take();
}

CountingBloomFilter CountingBloomFilter::decode(std::span<const uint8_t> wire) {
    ByteReader r(wire);
    FilterParams p;
    p.m = r.u64();
    p.k = r.u32();
    Bytes seed = r.raw(16);
    std::copy(seed.begin(), seed.end(), p.seed.begin());
    CountingBloomFilter f(p);
    f.total_ = r.u64();
    Bytes cells = r.blob();
    if (cells.size() != f.counters_.size() * 4)
        throw Error("counting filter cell array length mismatch");
    for (size_t i = 0; i < f.counters_.size(); ++i)
        f.counters_[i] = uint32_t(cells[4 * i]) | uint32_t(cells[4 * i + 1]) << 8 |
                         uint32_t(cells[4 * i + 2]) << 16 | uint32_t(cells[4 * i + 3]) << 24;
    return f;
}

}  // namespace kgtrade
