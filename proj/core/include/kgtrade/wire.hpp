#pragma once

#include "kgtrade/bloom.hpp"
#include "kgtrade/entropy.hpp"
#include "kgtrade/net.hpp"
#include "kgtrade/ot.hpp"

namespace kgtrade {
namespace wire {

/// Batch purpose: which construction the blinded values feed.
struct BatchPurpose {
    bool psi = true;
    EntropyMetricId metric = EntropyMetricId::PRED_OBJ_DESC;  // when !psi

    static BatchPurpose for_psi() { return {true, EntropyMetricId::PRED_OBJ_DESC}; }
    static BatchPurpose for_metric(EntropyMetricId m) { return {false, m}; }
    bool operator==(const BatchPurpose&) const = default;
};

void put_bn(ByteWriter& w, const Bn& v);
Bn get_bn(ByteReader& r);

Bytes encode_batch(const BatchPurpose& purpose, const std::vector<Bn>& values);
std::pair<BatchPurpose, std::vector<Bn>> decode_batch(std::span<const uint8_t> payload);

Bytes encode_counting_filter(EntropyMetricId metric, const CountingBloomFilter& f);
std::pair<EntropyMetricId, CountingBloomFilter> decode_counting_filter(
    std::span<const uint8_t> payload);

Bytes encode_ot_setup(const OTSetup& setup);
OTSetup decode_ot_setup(std::span<const uint8_t> payload);

Bytes encode_ot_request(const OTRequest& req);
OTRequest decode_ot_request(std::span<const uint8_t> payload);

Bytes encode_ot_response(const OTResponse& resp);
OTResponse decode_ot_response(std::span<const uint8_t> payload);

Bytes encode_public_key(const PublicKey& pub);
PublicKey decode_public_key(ByteReader& r);

}  // namespace wire
}  // namespace kgtrade
