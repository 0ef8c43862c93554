#pragma once

#include <array>

#include "kgtrade/bytes.hpp"

namespace kgtrade {

using FilterSeed = std::array<uint8_t, 16>;

struct FilterParams {
    uint64_t m = 1;  // cells
    uint32_t k = 1;  // hash functions
    FilterSeed seed{};

    bool operator==(const FilterParams&) const = default;
};

/// m = ceil(-n ln p / (ln 2)^2), k = max(1, round((m/n) ln 2)).
FilterParams optimal_params(uint64_t n, double p, const FilterSeed& seed = {});

/// Params for a k=1 counting filter: cells chosen so the probability that a
/// cell receives two or more of the n elements stays below p, i.e.
/// m >= n / sqrt(2p), and never below the plain optimal sizing.
FilterParams counting_params(uint64_t n, double p, const FilterSeed& seed = {});

/// The k cell indices for an item: double hashing (h1 + i*h2) mod m with
/// h1, h2 taken from HMAC-SHA256(seed, item).
std::vector<uint64_t> hash_positions(const FilterParams& params,
                                     std::span<const uint8_t> item);

class BloomFilter {
  public:
    explicit BloomFilter(FilterParams params);

    const FilterParams& params() const { return params_; }
    uint64_t inserted() const { return inserted_; }
    uint64_t popcount() const;

    void insert(std::span<const uint8_t> item);
    bool contains(std::span<const uint8_t> item) const;

    /// Sets ceil(fraction * m) additional uniformly chosen distinct bits.
    void add_noise(double fraction, uint64_t rng_seed);

    /// n̂ = -(m/k) ln(1 - popcount/m). Throws Error on a saturated filter.
    double estimate_cardinality() const;

    /// Wire format: m, k (big-endian), seed, inserted count, then the packed
    /// bit array (little-endian bit order within bytes), length-prefixed.
    Bytes encode() const;
    static BloomFilter decode(std::span<const uint8_t> wire);

    bool operator==(const BloomFilter&) const = default;

  private:
    FilterParams params_;
    Bytes bits_;  // packed, bit i at bits_[i/8] >> (i%8)
    uint64_t inserted_ = 0;

    bool get_bit(uint64_t i) const { return bits_[i >> 3] >> (i & 7) & 1; }
    void set_bit(uint64_t i) { bits_[i >> 3] |= uint8_t(1u << (i & 7)); }
};

class CountingBloomFilter {
  public:
    explicit CountingBloomFilter(FilterParams params);

    const FilterParams& params() const { return params_; }
    uint64_t total() const { return total_; }
    const std::vector<uint32_t>& counters() const { return counters_; }

    /// Raises the item's cells by multiplicity. Counter overflow is a hard
    /// error: the filter was undersized.
    void insert(std::span<const uint8_t> item, uint32_t multiplicity);

    /// Minimum over the item's cells; exact absent collisions when k=1.
    uint32_t count_query(std::span<const uint8_t> item) const;

    Bytes encode() const;
    static CountingBloomFilter decode(std::span<const uint8_t> wire);

    bool operator==(const CountingBloomFilter&) const = default;

  private:
    FilterParams params_;
    std::vector<uint32_t> counters_;  // little-endian 32-bit on the wire
    uint64_t total_ = 0;
};
}  // namespace kgtrade
