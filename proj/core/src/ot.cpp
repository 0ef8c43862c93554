#include "kgtrade/ot.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace kgtrade {

namespace {

constexpr size_t kBlock = 16;

std::string serialize_part(const std::set<Statement>& part) {
    std::string out;
    for (const Statement& s : part) {
        out += canonical_string(s);
        out += " .\n";
    }
    return out;
}

Bytes cbc(const Bytes& in, const SymKey& key, const CbcIv& iv, bool encrypt) {
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    if (!ctx) throw CryptoError("cipher ctx");
    Bytes out(in.size() + kBlock);
    int len1 = 0, len2 = 0;
    int ok = EVP_CipherInit_ex(ctx, EVP_aes_256_cbc(), nullptr, key.data(), iv.data(),
                               encrypt ? 1 : 0) &&
             EVP_CIPHER_CTX_set_padding(ctx, 0) &&
             EVP_CipherUpdate(ctx, out.data(), &len1, in.data(), int(in.size())) &&
             EVP_CipherFinal_ex(ctx, out.data() + len1, &len2);
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) throw CryptoError("AES-CBC failed");
    out.resize(size_t(len1 + len2));
    return out;
}

size_t padded_length(size_t payload) {
    size_t raw = 32 + 8 + payload;
    return (raw + kBlock - 1) / kBlock * kBlock;
}

}  // namespace

size_t common_plaintext_length(const Partition& parts) {
    size_t mx = kBlock;
    for (const auto& part : parts.parts)
        mx = std::max(mx, padded_length(serialize_part(part).size()));
    return mx;
}

PartEnvelope encrypt_part(const std::set<Statement>& part, const SymKey& key,
                          const CbcIv& iv, size_t padded_plaintext_len) {
    std::string data = serialize_part(part);
    if (padded_length(data.size()) > padded_plaintext_len)
        throw ParamError("part exceeds the common envelope length");
    Bytes plain;
    plain.reserve(padded_plaintext_len);
    Digest dg = sha256(to_bytes(data));
    plain.insert(plain.end(), dg.begin(), dg.end());
    ByteWriter w;
    w.u64(data.size());
    plain.insert(plain.end(), w.bytes().begin(), w.bytes().end());
    plain.insert(plain.end(), data.begin(), data.end());
    plain.resize(padded_plaintext_len, 0);
    PartEnvelope env;
    env.iv = iv;
    env.ciphertext = cbc(plain, key, iv, true);
    return env;
}

std::optional<KnowledgeGraph> decrypt_part(const PartEnvelope& env, const SymKey& key) {
    if (env.ciphertext.empty() || env.ciphertext.size() % kBlock) return std::nullopt;
    Bytes plain = cbc(env.ciphertext, key, env.iv, false);
    if (plain.size() < 40) return std::nullopt;
    ByteReader r(std::span<const uint8_t>(plain).subspan(32, 8));
    uint64_t len = r.u64();
    if (len > plain.size() - 40) return std::nullopt;
    std::span<const uint8_t> data(plain.data() + 40, len);
    Digest dg = sha256(data);
    if (!std::equal(dg.begin(), dg.end(), plain.begin())) return std::nullopt;
    std::string text(data.begin(), data.end());
    try {
        return parse_ntriples(text).graph;
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

std::pair<OTSetup, OTSellerSecrets> seller_prepare(const Partition& parts,
                                                   const BlindKeyPair& keys,
                                                   uint64_t shuffle_seed) {
    const size_t n = parts.parts.size();
    if (n < 1) throw ParamError("empty partition");

    OTSellerSecrets secrets;
    secrets.permutation.resize(n);
    std::iota(secrets.permutation.begin(), secrets.permutation.end(), size_t(0));
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(secrets.permutation.begin(), secrets.permutation.end(), rng);

    OTSetup setup;
    setup.pub = keys.pub();
    size_t common = common_plaintext_length(parts);
    secrets.keys.resize(n);
    setup.envelopes.resize(n);
    setup.nonces.reserve(n);
    for (size_t t = 0; t < n; ++t) {
        SymKey k;
        CbcIv iv;
        if (RAND_bytes(k.data(), int(k.size())) != 1 ||
            RAND_bytes(iv.data(), int(iv.size())) != 1)
            throw CryptoError("entropy failure");
        secrets.keys[t] = k;
        setup.envelopes[t] = encrypt_part(parts.parts[secrets.permutation[t]], k, iv, common);
    }
    for (;;) {
        if (setup.nonces.size() == n) break;
        Bn x = Bn::rand_range(setup.pub.n);
        if (std::find(setup.nonces.begin(), setup.nonces.end(), x) == setup.nonces.end())
            setup.nonces.push_back(std::move(x));
    }
    return {std::move(setup), std::move(secrets)};
}

std::vector<size_t> buyer_choose(size_t k, size_t n) {
    if (k < 1 || k > n) throw ParamError("require 1 <= k <= n");
    // Uniform without replacement, using OS randomness via rand_range.
    std::vector<size_t> pool(n);
    std::iota(pool.begin(), pool.end(), size_t(0));
    std::vector<size_t> out;
    out.reserve(k);
    for (size_t j = 0; j < k; ++j) {
        size_t pick = 0;
        if (pool.size() > 1) {
            Bn b = Bn::rand_range(Bn((unsigned long)pool.size()));
            Bytes bytes = b.to_bytes();
            for (uint8_t by : bytes) pick = pick << 8 | by;
        }
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + long(pick));
    }
    return out;
}

std::pair<OTRequest, OTBuyerSecrets> buyer_request(const std::vector<size_t>& indices,
                                                   const OTSetup& setup) {
    OTRequest req;
    OTBuyerSecrets secrets;
    secrets.indices = indices;
    for (size_t i : indices) {
        if (i >= setup.nonces.size()) throw ParamError("index out of range");
        Bn r = Bn::rand_range(setup.pub.n);
        Bn re = r.mod_exp(setup.pub.e, setup.pub.n);
        req.values.push_back(setup.nonces[i].mod_add(re, setup.pub.n));
        secrets.blind.push_back(std::move(r));
    }
    return {std::move(req), std::move(secrets)};
}

SymKey ot_mask(const Bn& value, size_t modulus_bytes, uint32_t t, uint32_t j) {
    ByteWriter w;
    w.raw(value.to_fixed_bytes(modulus_bytes));
    w.u32(t);
    w.u32(j);
    Digest d = sha256(w.bytes());
    SymKey out;
    std::copy(d.begin(), d.end(), out.begin());
    return out;
}

OTResponse seller_respond(const OTRequest& request, const OTSellerSecrets& secrets,
                          const OTSetup& setup, const BlindKeyPair& priv) {
    const size_t n = secrets.keys.size();
    const size_t mod_bytes = setup.pub.modulus_bytes();
    OTResponse resp;
    resp.masked.resize(request.values.size());
    for (size_t j = 0; j < request.values.size(); ++j) {
        resp.masked[j].resize(n);
        for (size_t t = 0; t < n; ++t) {
            Bn base = request.values[j].mod_sub(setup.nonces[t], priv.n);
            Bn unmasked = base.mod_exp(priv.d, priv.n);
            SymKey mask = ot_mask(unmasked, mod_bytes, uint32_t(t), uint32_t(j));
            SymKey y;
            for (size_t b = 0; b < y.size(); ++b)
                y[b] = secrets.keys[t][b] ^ mask[b];
            resp.masked[j][t] = y;
        }
    }
    return resp;
}

std::vector<RecoveredPart> buyer_recover(const OTResponse& response,
                                         const OTBuyerSecrets& secrets,
                                         const OTSetup& setup) {
    if (response.masked.size() != secrets.indices.size())
        throw ProtocolError("OT response row count mismatch");
    const size_t n = setup.envelopes.size();
    const size_t mod_bytes = setup.pub.modulus_bytes();
    std::vector<RecoveredPart> out;
    for (size_t j = 0; j < secrets.indices.size(); ++j) {
        if (response.masked[j].size() != n)
            throw ProtocolError("OT response row width mismatch");
        size_t i = secrets.indices[j];
        SymKey mask = ot_mask(secrets.blind[j], mod_bytes, uint32_t(i), uint32_t(j));
        SymKey key;
        for (size_t b = 0; b < key.size(); ++b)
            key[b] = response.masked[j][i][b] ^ mask[b];
        RecoveredPart part;
        part.index = i;
        if (auto g = decrypt_part(setup.envelopes[i], key)) {
            part.integrity_ok = true;
            part.statements = std::move(*g);
        }
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace kgtrade
