#pragma once

#include <map>

#include "kgtrade/blindsig.hpp"
#include "kgtrade/bloom.hpp"
#include "kgtrade/kg.hpp"

namespace kgtrade {

struct IntersectionResult {
    KnowledgeGraph statements;  // subset of the Buyer's graph
    double filter_cardinality_estimate = 0.0;
};

/// Inserts signed_digest(canonical_bytes(s), sign_direct(s)) for every
/// statement into a filter sized by optimal_params(|g|, p). Deterministic
/// given (graph, key, seed): rebuilt filters are byte-identical.
BloomFilter seller_build_filter(const KnowledgeGraph& g, const BlindKeyPair& keys,
                                double p, const FilterSeed& seed);

struct BlindRequests {
    /// Blinded values in transmission order: one per statement (sorted
    /// canonical order), then decoy_count random decoys.
    std::vector<Bn> blinded;
    /// Blinding secret per real index; decoys carry no secret.
    std::vector<BlindingFactor> secrets;
    /// Statements in the same order as the real prefix of `blinded`.
    std::vector<Statement> order;
};

BlindRequests buyer_prepare_requests(const KnowledgeGraph& g, const PublicKey& pub,
                                     size_t decoy_count = 0);

/// Verifies every unblinded signature, then tests each statement's digest
/// against the Seller filter. A signature failing verification is
/// unambiguous Seller misbehavior and aborts with ProtocolError.
IntersectionResult buyer_compute_intersection(const BlindRequests& requests,
                                              const std::vector<Signature>& sigs,
                                              const BloomFilter& filter,
                                              const PublicKey& pub);

}  // namespace kgtrade
