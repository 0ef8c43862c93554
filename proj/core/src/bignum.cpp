#include "kgtrade/bignum.hpp"

#include <openssl/rand.h>

namespace kgtrade {

namespace {
BN_CTX* ctx() {
    thread_local BN_CTX* c = BN_CTX_new();
    return c;
}
void check(int ok, const char* what) {
    if (!ok) throw CryptoError(std::string("bignum operation failed: ") + what);
}
}  // namespace

Bn::Bn() : bn_(BN_new()) {
    check(bn_ != nullptr, "new");
}

Bn::Bn(unsigned long word) : Bn() {
    check(BN_set_word(bn_, word), "set_word");
}

Bn::Bn(const Bn& other) : bn_(BN_dup(other.bn_)) {
    check(bn_ != nullptr, "dup");
}

Bn::Bn(Bn&& other) noexcept : bn_(other.bn_) {
    other.bn_ = nullptr;
}

Bn& Bn::operator=(const Bn& other) {
    if (this != &other) check(BN_copy(bn_, other.bn_) != nullptr, "copy");
    return *this;
}

Bn& Bn::operator=(Bn&& other) noexcept {
    std::swap(bn_, other.bn_);
    return *this;
}

Bn::~Bn() {
    if (bn_) BN_free(bn_);
}

Bn Bn::from_bytes(std::span<const uint8_t> be) {
    Bn out;
    check(BN_bin2bn(be.data(), int(be.size()), out.bn_) != nullptr, "bin2bn");
    return out;
}

Bn Bn::from_hex(const std::string& hex) {
    Bn out;
    BIGNUM* p = out.bn_;
    check(BN_hex2bn(&p, hex.c_str()), "hex2bn");
    return out;
}

Bn Bn::rand_range(const Bn& bound) {
    Bn out;
    check(BN_rand_range(out.bn_, bound.bn_), "rand_range");
    return out;
}

Bytes Bn::to_bytes() const {
    Bytes out(num_bytes());
    check(BN_bn2bin(bn_, out.data()) >= 0, "bn2bin");
    return out;
}

Bytes Bn::to_fixed_bytes(size_t width) const {
    Bytes out(width);
    check(BN_bn2binpad(bn_, out.data(), int(width)) >= 0, "bn2binpad");
    return out;
}

std::string Bn::to_hex() const {
    char* s = BN_bn2hex(bn_);
    check(s != nullptr, "bn2hex");
    std::string out(s);
    OPENSSL_free(s);
    return out;
}

int Bn::num_bits() const {
    return BN_num_bits(bn_);
}
size_t Bn::num_bytes() const {
    return size_t(BN_num_bytes(bn_));
}
bool Bn::is_zero() const {
    return BN_is_zero(bn_);
}
bool Bn::is_odd() const {
    return BN_is_odd(bn_);
}

bool Bn::operator==(const Bn& o) const {
    return BN_cmp(bn_, o.bn_) == 0;
}

std::strong_ordering Bn::operator<=>(const Bn& o) const {
    int c = BN_cmp(bn_, o.bn_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Bn Bn::add(const Bn& o) const {
    Bn out;
    check(BN_add(out.bn_, bn_, o.bn_), "add");
    return out;
}

Bn Bn::sub(const Bn& o) const {
    Bn out;
    check(BN_sub(out.bn_, bn_, o.bn_), "sub");
    return out;
}

Bn Bn::mul(const Bn& o) const {
    Bn out;
    check(BN_mul(out.bn_, bn_, o.bn_, ctx()), "mul");
    return out;
}

Bn Bn::mod(const Bn& m) const {
    Bn out;
    check(BN_nnmod(out.bn_, bn_, m.bn_, ctx()), "mod");
    return out;
}

Bn Bn::mod_add(const Bn& o, const Bn& m) const {
    Bn out;
    check(BN_mod_add(out.bn_, bn_, o.bn_, m.bn_, ctx()), "mod_add");
    return out;
}

Bn Bn::mod_sub(const Bn& o, const Bn& m) const {
    Bn out;
    check(BN_mod_sub(out.bn_, bn_, o.bn_, m.bn_, ctx()), "mod_sub");
    return out;
}

Bn Bn::mod_mul(const Bn& o, const Bn& m) const {
    Bn out;
    check(BN_mod_mul(out.bn_, bn_, o.bn_, m.bn_, ctx()), "mod_mul");
    return out;
}

Bn Bn::mod_exp(const Bn& e, const Bn& m) const {
    Bn out;
    check(BN_mod_exp(out.bn_, bn_, e.bn_, m.bn_, ctx()), "mod_exp");
    return out;
}

Bn Bn::mod_inverse(const Bn& m) const {
    Bn out;
    if (!BN_mod_inverse(out.bn_, bn_, m.bn_, ctx()))
        throw ParamError("value has no modular inverse");
    return out;
}

Bn Bn::gcd(const Bn& o) const {
    Bn out;
    check(BN_gcd(out.bn_, bn_, o.bn_, ctx()), "gcd");
    return out;
}

}  // namespace kgtrade
