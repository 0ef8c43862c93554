#include "kgtrade/hash.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

namespace kgtrade {

Digest sha256(std::span<const uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr))
        throw CryptoError("SHA-256 failed");
    return out;
}

Digest hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (!HMAC(EVP_sha256(), key.data(), int(key.size()), data.data(), data.size(),
              out.data(), &len))
        throw CryptoError("HMAC-SHA-256 failed");
    return out;
}

std::string digest_hex(const Digest& d) {
    return to_hex(d);
}

}  // namespace kgtrade
