#pragma once

#include "kgtrade/bignum.hpp"
#include "kgtrade/hash.hpp"

namespace kgtrade {

struct PublicKey {
    Bn n;
    Bn e;

    size_t modulus_bytes() const { return n.num_bytes(); }
    bool operator==(const PublicKey&) const = default;
};

struct BlindKeyPair {
    Bn n;
    Bn e;
    Bn d;
    Bn p;
    Bn q;

    PublicKey pub() const { return {n, e}; }
};

struct BlindingFactor {
    Bn r;
};

struct Signature {
    Bn s;

    bool operator==(const Signature&) const = default;
};

/// Generates a fresh RSA pair with e = 65537 and d computed mod lcm(p-1, q-1).
BlindKeyPair keygen(int bits);

/// Full-domain hash: counter-mode SHA-256 expansion of msg, reduced mod n.
Bn fdh(std::span<const uint8_t> msg, const Bn& n);

/// Fresh blinding factor, invertible mod n.
BlindingFactor make_blinding_factor(const PublicKey& pub);

Bn blind(std::span<const uint8_t> msg, const BlindingFactor& r, const PublicKey& pub);
Bn sign_blinded(const Bn& blinded, const BlindKeyPair& priv);
Signature unblind(const Bn& blinded_sig, const BlindingFactor& r, const PublicKey& pub);
Signature sign_direct(std::span<const uint8_t> msg, const BlindKeyPair& priv);
bool verify(std::span<const uint8_t> msg, const Signature& sig, const PublicKey& pub);

/// SHA-256(signature as fixed-width big-endian bytes || statement bytes).
Digest signed_digest(std::span<const uint8_t> stmt_bytes, const Signature& sig,
                     const PublicKey& pub);

/// Signs a batch of blinded values across `parallelism` workers; output order
/// equals input order regardless of worker count.
std::vector<Bn> sign_batch(const std::vector<Bn>& blinded, const BlindKeyPair& priv,
                           unsigned parallelism);

}  // namespace kgtrade
