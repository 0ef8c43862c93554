#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "kgtrade/bytes.hpp"

namespace kgtrade {

enum class MsgType : uint8_t {
    HELLO = 1,
    CONFIG,
    STATS,
    BLIND_BATCH,
    SIGNED_BATCH,
    PSI_FILTER,
    COUNTING_FILTER,
    OT_SETUP,
    OT_REQUEST,
    OT_RESPONSE,
    CONTINUE,
    ABORT,
    DISCLOSURE,
};

const char* msg_type_name(MsgType t);

struct Frame {
    MsgType type;
    Bytes payload;
};

/// Payload byte totals per (step, sent/received). Framing and transport
/// overhead is excluded.
class TrafficMeter {
  public:
    void add(const std::string& step, bool outgoing, uint64_t payload_bytes);

    uint64_t total(bool outgoing) const;
    uint64_t step_total(const std::string& step, bool outgoing) const;
    const std::map<std::pair<std::string, bool>, uint64_t>& cells() const {
        return cells_;
    }

  private:
    std::map<std::pair<std::string, bool>, uint64_t> cells_;
};

/// Ordered, reliable byte channel with frame helpers. A frame on the wire is
/// a 4-byte big-endian payload length, a 1-byte type tag, and the payload.
class Channel {
  public:
    virtual ~Channel() = default;

    void send_frame(const Frame& f);
    Frame recv_frame();
    virtual void close() = 0;

    void set_step(std::string step) { step_ = std::move(step); }
    const TrafficMeter& meter() const { return meter_; }

  protected:
    virtual void write_all(std::span<const uint8_t> data) = 0;
    virtual void read_all(std::span<uint8_t> out) = 0;

  private:
    std::string step_ = "init";
    TrafficMeter meter_;
};

/// In-process pair of connected channels; the default test harness.
std::pair<std::unique_ptr<Channel>, std::unique_ptr<Channel>> make_loopback_pair();

struct TlsConfig {
    bool enabled = false;
    std::string cert_file;  // server certificate / client cert (optional)
    std::string key_file;
    std::string ca_file;  // peer verification when set
};

std::unique_ptr<Channel> tcp_connect(const std::string& host, uint16_t port,
                                     const TlsConfig& tls = {});

class TcpListener {
  public:
    TcpListener(const std::string& host, uint16_t port, const TlsConfig& tls = {});
    ~TcpListener();
    std::unique_ptr<Channel> accept_one();
    uint16_t port() const { return port_; }

  private:
    int fd_ = -1;
    uint16_t port_ = 0;
    TlsConfig tls_;
};

}  // namespace kgtrade
