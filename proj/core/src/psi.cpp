#include "kgtrade/psi.hpp"

namespace kgtrade {

BloomFilter seller_build_filter(const KnowledgeGraph& g, const BlindKeyPair& keys,
                                double p, const FilterSeed& seed) {
    uint64_t n = std::max<uint64_t>(1, g.size());
    BloomFilter filter(optimal_params(n, p, seed));
    PublicKey pub = keys.pub();
    for (const Statement& s : g.statements()) {
        Bytes canon = canonical_bytes(s);
        Signature sig = sign_direct(canon, keys);
        filter.insert(signed_digest(canon, sig, pub));
    }
    return filter;
}

BlindRequests buyer_prepare_requests(const KnowledgeGraph& g, const PublicKey& pub,
                                     size_t decoy_count) {
    BlindRequests out;
    out.blinded.reserve(g.size() + decoy_count);
    out.secrets.reserve(g.size());
    out.order.reserve(g.size());
    for (const Statement& s : g.statements()) {
        BlindingFactor r = make_blinding_factor(pub);
        out.blinded.push_back(blind(canonical_bytes(s), r, pub));
        out.secrets.push_back(std::move(r));
        out.order.push_back(s);
    }
    for (size_t i = 0; i < decoy_count; ++i)
        out.blinded.push_back(Bn::rand_range(pub.n));
    return out;
}

IntersectionResult buyer_compute_intersection(const BlindRequests& requests,
                                              const std::vector<Signature>& sigs,
                                              const BloomFilter& filter,
                                              const PublicKey& pub) {
    if (sigs.size() < requests.order.size())
        throw ProtocolError("signature batch shorter than request batch");
    IntersectionResult result;
    for (size_t i = 0; i < requests.order.size(); ++i) {
        Bytes canon = canonical_bytes(requests.order[i]);
        if (!verify(canon, sigs[i], pub))
            throw ProtocolError("Seller returned an invalid signature (misbehavior)");
        if (filter.contains(signed_digest(canon, sigs[i], pub)))
            result.statements.insert(requests.order[i]);
    }
    result.filter_cardinality_estimate = filter.estimate_cardinality();
    return result;
}

}  // namespace kgtrade
