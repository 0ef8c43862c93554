#include "kgtrade/wire.hpp"

#include <algorithm>

namespace kgtrade {
namespace wire {

void put_bn(ByteWriter& w, const Bn& v) {
    w.blob(v.to_bytes());
}

Bn get_bn(ByteReader& r) {
    return Bn::from_bytes(r.blob());
}

namespace {
uint8_t purpose_tag(const BatchPurpose& p) {
    return p.psi ? 0 : uint8_t(p.metric) + 1;
}

BatchPurpose purpose_from_tag(uint8_t tag) {
    if (tag == 0) return BatchPurpose::for_psi();
    if (tag > 9) throw ProtocolError("bad batch purpose tag");
    return BatchPurpose::for_metric(EntropyMetricId(tag - 1));
}
}  // namespace

Bytes encode_batch(const BatchPurpose& purpose, const std::vector<Bn>& values) {
    ByteWriter w;
    w.u8(purpose_tag(purpose));
    w.u32(uint32_t(values.size()));
    for (const Bn& v : values) put_bn(w, v);
    return w.take();
}

std::pair<BatchPurpose, std::vector<Bn>> decode_batch(std::span<const uint8_t> payload) {
    ByteReader r(payload);
    BatchPurpose p = purpose_from_tag(r.u8());
    uint32_t n = r.u32();
    std::vector<Bn> values;
    values.reserve(n);
    for (uint32_t i = 0; i < n; ++i) values.push_back(get_bn(r));
    if (!r.done()) throw ProtocolError("trailing bytes in batch");
    return {p, std::move(values)};
}

Bytes encode_counting_filter(EntropyMetricId metric, const CountingBloomFilter& f) {
    ByteWriter w;
    w.u8(uint8_t(metric));
    w.raw(f.encode());
    return w.take();
}

std::pair<EntropyMetricId, CountingBloomFilter> decode_counting_filter(
    std::span<const uint8_t> payload) {
    if (payload.empty()) throw ProtocolError("empty counting filter payload");
    if (payload[0] > 8) throw ProtocolError("bad metric tag");
    EntropyMetricId id = EntropyMetricId(payload[0]);
    return {id, CountingBloomFilter::decode(payload.subspan(1))};
}

Bytes encode_public_key(const PublicKey& pub) {
    ByteWriter w;
    put_bn(w, pub.n);
    put_bn(w, pub.e);
    return w.take();
}

PublicKey decode_public_key(ByteReader& r) {
    PublicKey pub;
    pub.n = get_bn(r);
    pub.e = get_bn(r);
    return pub;
}

Bytes encode_ot_setup(const OTSetup& setup) {
    ByteWriter w;
    put_bn(w, setup.pub.n);
    put_bn(w, setup.pub.e);
    w.u32(uint32_t(setup.nonces.size()));
    for (const Bn& x : setup.nonces) put_bn(w, x);
    w.u32(uint32_t(setup.envelopes.size()));
    for (const PartEnvelope& env : setup.envelopes) {
        w.raw(env.iv);
        w.blob(env.ciphertext);
    }
    return w.take();
}

OTSetup decode_ot_setup(std::span<const uint8_t> payload) {
    ByteReader r(payload);
    OTSetup setup;
    setup.pub.n = get_bn(r);
    setup.pub.e = get_bn(r);
    uint32_t nn = r.u32();
    for (uint32_t i = 0; i < nn; ++i) setup.nonces.push_back(get_bn(r));
    uint32_t ne = r.u32();
    for (uint32_t i = 0; i < ne; ++i) {
        PartEnvelope env;
        Bytes iv = r.raw(16);
        std::copy(iv.begin(), iv.end(), env.iv.begin());
        env.ciphertext = r.blob();
        setup.envelopes.push_back(std::move(env));
    }
    if (!r.done()) throw ProtocolError("trailing bytes in OT setup");
    return setup;
}

Bytes encode_ot_request(const OTRequest& req) {
    ByteWriter w;
    w.u32(uint32_t(req.values.size()));
    for (const Bn& v : req.values) put_bn(w, v);
    return w.take();
}

OTRequest decode_ot_request(std::span<const uint8_t> payload) {
    ByteReader r(payload);
    OTRequest req;
    uint32_t k = r.u32();
    for (uint32_t i = 0; i < k; ++i) req.values.push_back(get_bn(r));
    if (!r.done()) throw ProtocolError("trailing bytes in OT request");
    return req;
}

Bytes encode_ot_response(const OTResponse& resp) {
    ByteWriter w;
    w.u32(uint32_t(resp.masked.size()));
    w.u32(resp.masked.empty() ? 0 : uint32_t(resp.masked[0].size()));
    for (const auto& row : resp.masked)
        for (const SymKey& y : row) w.raw(y);
    return w.take();
}

OTResponse decode_ot_response(std::span<const uint8_t> payload) {
    ByteReader r(payload);
    uint32_t k = r.u32();
    uint32_t n = r.u32();
    OTResponse resp;
    resp.masked.resize(k);
    for (uint32_t j = 0; j < k; ++j) {
        resp.masked[j].resize(n);
        for (uint32_t t = 0; t < n; ++t) {
            Bytes b = r.raw(32);
            std::copy(b.begin(), b.end(), resp.masked[j][t].begin());
        }
    }
    if (!r.done()) throw ProtocolError("trailing bytes in OT response");
    return resp;
}

}  // namespace wire
}  // namespace kgtrade
