#pragma once

#include <optional>

#include "kgtrade/blindsig.hpp"
#include "kgtrade/partition.hpp"

namespace kgtrade {

using SymKey = std::array<uint8_t, 32>;
using CbcIv = std::array<uint8_t, 16>;

/// AES-256-CBC ciphertext of one serialized part. The plaintext is
/// digest(32) || length(8) || data || zero padding, so every envelope can be
/// padded to the common length and a wrong key fails the integrity check.
struct PartEnvelope {
    CbcIv iv{};
    Bytes ciphertext;

    bool operator==(const PartEnvelope&) const = default;
};

struct OTSetup {
    PublicKey pub;
    std::vector<Bn> nonces;               // x_1..x_n, pairwise distinct, < N
    std::vector<PartEnvelope> envelopes;  // seller-shuffled order
};

struct OTSellerSecrets {
    std::vector<SymKey> keys;         // K_t, aligned with setup.envelopes
    std::vector<size_t> permutation;  // envelope t holds original part permutation[t]
};

struct OTRequest {
    std::vector<Bn> values;  // v_j = (x_{i_j} + r_j^e) mod N
};

struct OTBuyerSecrets {
    std::vector<Bn> blind;       // r_j per request
    std::vector<size_t> indices;  // chosen envelope indices i_j
};

struct OTResponse {
    /// Row-major k x n: y[j][t] = K_t XOR H((v_j - x_t)^d mod N || t || j).
    std::vector<std::vector<SymKey>> masked;
};

struct RecoveredPart {
    size_t index = 0;  // envelope index
    bool integrity_ok = false;
    KnowledgeGraph statements;  // valid only when integrity_ok
};

PartEnvelope encrypt_part(const std::set<Statement>& part, const SymKey& key,
                          const CbcIv& iv, size_t padded_plaintext_len);
/// Returns nullopt on integrity failure.
std::optional<KnowledgeGraph> decrypt_part(const PartEnvelope& env, const SymKey& key);

/// Common plaintext length all envelopes of a partition are padded to.
size_t common_plaintext_length(const Partition& parts);

std::pair<OTSetup, OTSellerSecrets> seller_prepare(const Partition& parts,
                                                   const BlindKeyPair& keys,
                                                   uint64_t shuffle_seed);

/// k distinct indices drawn uniformly without replacement from [0, n).
std::vector<size_t> buyer_choose(size_t k, size_t n);

std::pair<OTRequest, OTBuyerSecrets> buyer_request(const std::vector<size_t>& indices,
                                                   const OTSetup& setup);

/// Index-free by construction: the Seller masks every key for every request.
OTResponse seller_respond(const OTRequest& request, const OTSellerSecrets& secrets,
                          const OTSetup& setup, const BlindKeyPair& priv);

std::vector<RecoveredPart> buyer_recover(const OTResponse& response,
                                         const OTBuyerSecrets& secrets,
                                         const OTSetup& setup);

/// The masking hash H(value || t || j) truncated to the key length.
SymKey ot_mask(const Bn& value, size_t modulus_bytes, uint32_t t, uint32_t j);

}  // namespace kgtrade
