#pragma once

#include <openssl/bn.h>

#include <compare>

#include "kgtrade/bytes.hpp"

namespace kgtrade {

/// Value-semantic wrapper around an OpenSSL BIGNUM.
class Bn {
  public:
    Bn();
    explicit Bn(unsigned long word);
    Bn(const Bn& other);
    Bn(Bn&& other) noexcept;
    Bn& operator=(const Bn& other);
    Bn& operator=(Bn&& other) noexcept;
    ~Bn();

    static Bn from_bytes(std::span<const uint8_t> be);
    static Bn from_hex(const std::string& hex);
    /// Uniform in [0, bound).
    static Bn rand_range(const Bn& bound);

    Bytes to_bytes() const;                    // minimal big-endian
    Bytes to_fixed_bytes(size_t width) const;  // zero-padded big-endian
    std::string to_hex() const;

    int num_bits() const;
    size_t num_bytes() const;
    bool is_zero() const;
    bool is_odd() const;

    bool operator==(const Bn& o) const;
    std::strong_ordering operator<=>(const Bn& o) const;

    Bn add(const Bn& o) const;
    Bn sub(const Bn& o) const;  // requires *this >= o
    Bn mul(const Bn& o) const;
    Bn mod(const Bn& m) const;
    Bn mod_add(const Bn& o, const Bn& m) const;
    Bn mod_sub(const Bn& o, const Bn& m) const;
    Bn mod_mul(const Bn& o, const Bn& m) const;
    Bn mod_exp(const Bn& e, const Bn& m) const;
    /// Throws ParamError when no inverse exists.
    Bn mod_inverse(const Bn& m) const;
    Bn gcd(const Bn& o) const;

    BIGNUM* raw() { return bn_; }
    const BIGNUM* raw() const { return bn_; }

  private:
    BIGNUM* bn_;
};

}  // namespace kgtrade
