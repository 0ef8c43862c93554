#pragma once

#include <array>

#include "kgtrade/bytes.hpp"

namespace kgtrade {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);
Digest hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> data);

std::string digest_hex(const Digest& d);

}  // namespace kgtrade
