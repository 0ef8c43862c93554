#include "kgtrade/blindsig.hpp"

#include <atomic>
#include <thread>

namespace kgtrade {

namespace {

Bn one() {
    return Bn(1);
}

Bn lcm(const Bn& a, const Bn& b) {
    Bn g = a.gcd(b);
    // a*b/g; exact division
    Bn prod = a.mul(b);
    Bn q;
    BN_CTX* ctx = BN_CTX_new();
    BN_div(q.raw(), nullptr, prod.raw(), g.raw(), ctx);
    BN_CTX_free(ctx);
    return q;
}

Bn gen_prime(int bits) {
    Bn p;
    if (!BN_generate_prime_ex(p.raw(), bits, 0, nullptr, nullptr, nullptr))
        throw CryptoError("prime generation failed");
    return p;
}

}  // namespace

BlindKeyPair keygen(int bits) {
    if (bits < 1024) throw ParamError("modulus size must be at least 1024 bits");
    for (;;) {
        Bn p = gen_prime(bits / 2);
        Bn q = gen_prime(bits - bits / 2);
        if (p == q) continue;
        Bn n = p.mul(q);
        if (n.num_bits() != bits) continue;
        Bn e(65537);
        Bn lambda = lcm(p.sub(one()), q.sub(one()));
        if (!(e.gcd(lambda) == one())) continue;
        Bn d = e.mod_inverse(lambda);
        return BlindKeyPair{std::move(n), std::move(e), std::move(d), std::move(p),
                            std::move(q)};
    }
}

Bn fdh(std::span<const uint8_t> msg, const Bn& n) {
    // Expand to modulus length + 16 bytes, then reduce; the surplus keeps the
    // reduced value statistically close to uniform.
    size_t want = n.num_bytes() + 16;
    Bytes stream;
    stream.reserve(want + 32);
    uint32_t counter = 0;
    while (stream.size() < want) {
        ByteWriter w;
        w.u32(counter++);
        w.raw(msg);
        Digest d = sha256(w.bytes());
        stream.insert(stream.end(), d.begin(), d.end());
    }
    stream.resize(want);
    return Bn::from_bytes(stream).mod(n);
}

BlindingFactor make_blinding_factor(const PublicKey& pub) {
    for (;;) {
        Bn r = Bn::rand_range(pub.n);
        if (r < Bn(2)) continue;
        if (r.gcd(pub.n) == one()) return BlindingFactor{std::move(r)};
    }
}

Bn blind(std::span<const uint8_t> msg, const BlindingFactor& r, const PublicKey& pub) {
    Bn h = fdh(msg, pub.n);
    Bn mask = r.r.mod_exp(pub.e, pub.n);
    return h.mod_mul(mask, pub.n);
}

Bn sign_blinded(const Bn& blinded, const BlindKeyPair& priv) {
    return blinded.mod_exp(priv.d, priv.n);
}

Signature unblind(const Bn& blinded_sig, const BlindingFactor& r, const PublicKey& pub) {
    Bn rinv = r.r.mod_inverse(pub.n);
    return Signature{blinded_sig.mod_mul(rinv, pub.n)};
}

Signature sign_direct(std::span<const uint8_t> msg, const BlindKeyPair& priv) {
    return Signature{fdh(msg, priv.n).mod_exp(priv.d, priv.n)};
}

bool verify(std::span<const uint8_t> msg, const Signature& sig, const PublicKey& pub) {
    return sig.s.mod_exp(pub.e, pub.n) == fdh(msg, pub.n);
}

Digest signed_digest(std::span<const uint8_t> stmt_bytes, const Signature& sig,
                     const PublicKey& pub) {
    ByteWriter w;
    w.raw(sig.s.to_fixed_bytes(pub.modulus_bytes()));
    w.raw(stmt_bytes);
    return sha256(w.bytes());
}

std::vector<Bn> sign_batch(const std::vector<Bn>& blinded, const BlindKeyPair& priv,
                           unsigned parallelism) {
    std::vector<Bn> out(blinded.size());
    if (blinded.empty()) return out;
    parallelism = std::max(1u, std::min<unsigned>(parallelism, unsigned(blinded.size())));
    if (parallelism == 1) {
        for (size_t i = 0; i < blinded.size(); ++i) out[i] = sign_blinded(blinded[i], priv);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(parallelism);
    for (unsigned w = 0; w < parallelism; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= blinded.size()) return;
                out[i] = sign_blinded(blinded[i], priv);
            }
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

}  // namespace kgtrade
