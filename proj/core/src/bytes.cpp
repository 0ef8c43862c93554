#include "kgtrade/bytes.hpp"

namespace kgtrade {

void ByteWriter::u32(uint32_t v) {
    for (int i = 3; i >= 0; --i) buf_.push_back(uint8_t(v >> (8 * i)));
}

void ByteWriter::u64(uint64_t v) {
    for (int i = 7; i >= 0; --i) buf_.push_back(uint8_t(v >> (8 * i)));
}

void ByteWriter::raw(std::span<const uint8_t> data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
}

void ByteWriter::raw(const std::string& s) {
    buf_.insert(buf_.end(), s.begin(), s.end());
}

void ByteWriter::blob(std::span<const uint8_t> data) {
    u32(uint32_t(data.size()));
    raw(data);
}

void ByteWriter::blob(const std::string& s) {
    u32(uint32_t(s.size()));
    raw(s);
}

void ByteReader::need(size_t n) const {
    if (pos_ + n > data_.size()) throw Error("truncated payload");
}

uint8_t ByteReader::u8() {
    need(1);
    return data_[pos_++];
}

uint32_t ByteReader::u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
    return v;
}

uint64_t ByteReader::u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
    return v;
}

Bytes ByteReader::raw(size_t n) {
    need(n);
    Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
    pos_ += n;
    return out;
}

Bytes ByteReader::blob() {
    size_t n = u32();
    return raw(n);
}

std::string ByteReader::blob_str() {
    Bytes b = blob();
    return std::string(b.begin(), b.end());
}

std::string to_hex(std::span<const uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

static int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error("invalid hex digit");
}

Bytes from_hex(const std::string& hex) {
    if (hex.size() % 2) throw Error("odd hex length");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = uint8_t(hex_val(hex[2 * i]) << 4 | hex_val(hex[2 * i + 1]));
    return out;
}

}  // namespace kgtrade
