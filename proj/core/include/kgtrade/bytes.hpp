#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgtrade {

using Bytes = std::vector<uint8_t>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    size_t line;
    ParseError(size_t line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};
struct ParamError : Error {
    using Error::Error;
};
struct CryptoError : Error {
    using Error::Error;
};
struct ProtocolError : Error {
    using Error::Error;
};
struct TransportError : Error {
    using Error::Error;
};

/// Big-endian binary writer for wire payloads.
class ByteWriter {
  public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u32(uint32_t v);
    void u64(uint64_t v);
    void raw(std::span<const uint8_t> data);
    void raw(const std::string& s);
    /// u32 length prefix followed by the bytes.
    void blob(std::span<const uint8_t> data);
    void blob(const std::string& s);

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

  private:
    Bytes buf_;
};

/// Matching reader; throws Error on truncation.
class ByteReader {
  public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8();
    uint32_t u32();
    uint64_t u64();
    Bytes raw(size_t n);
    Bytes blob();
    std::string blob_str();

    size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }

  private:
    void need(size_t n) const;
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(const std::string& hex);

inline Bytes to_bytes(const std::string& s) {
    return Bytes(s.begin(), s.end());
}

}  // namespace kgtrade
