#include "kgtrade/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <openssl/err.h>
#include <openssl/ssl.h>
#include <sys/socket.h>
#include <unistd.h>

#include <condition_variable>
#include <cstring>
#include <deque>

namespace kgtrade {

const char* msg_type_name(MsgType t) {
    switch (t) {
        case MsgType::HELLO: return "HELLO";
        case MsgType::CONFIG: return "CONFIG";
        case MsgType::STATS: return "STATS";
        case MsgType::BLIND_BATCH: return "BLIND_BATCH";
        case MsgType::SIGNED_BATCH: return "SIGNED_BATCH";
        case MsgType::PSI_FILTER: return "PSI_FILTER";
        case MsgType::COUNTING_FILTER: return "COUNTING_FILTER";
        case MsgType::OT_SETUP: return "OT_SETUP";
        case MsgType::OT_REQUEST: return "OT_REQUEST";
        case MsgType::OT_RESPONSE: return "OT_RESPONSE";
        case MsgType::CONTINUE: return "CONTINUE";
        case MsgType::ABORT: return "ABORT";
        case MsgType::DISCLOSURE: return "DISCLOSURE";
    }
    return "UNKNOWN";
}

void TrafficMeter::add(const std::string& step, bool outgoing, uint64_t payload_bytes) {
    cells_[{step, outgoing}] += payload_bytes;
}

uint64_t TrafficMeter::total(bool outgoing) const {
    uint64_t t = 0;
    for (auto& [key, v] : cells_)
        if (key.second == outgoing) t += v;
    return t;
}

uint64_t TrafficMeter::step_total(const std::string& step, bool outgoing) const {
    auto it = cells_.find({step, outgoing});
    return it == cells_.end() ? 0 : it->second;
}

void Channel::send_frame(const Frame& f) {
    ByteWriter w;
    w.u32(uint32_t(f.payload.size()));
    w.u8(uint8_t(f.type));
    w.raw(f.payload);
    write_all(w.bytes());
    meter_.add(step_, true, f.payload.size());
}

Frame Channel::recv_frame() {
    uint8_t header[5];
    read_all(header);
    uint32_t len = uint32_t(header[0]) << 24 | uint32_t(header[1]) << 16 |
                   uint32_t(header[2]) << 8 | uint32_t(header[3]);
    Frame f;
    f.type = MsgType(header[4]);
    f.payload.resize(len);
    read_all(f.payload);
    meter_.add(step_, false, len);
    return f;
}

namespace {

struct Pipe {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<uint8_t> data;
    bool closed = false;

    void write(std::span<const uint8_t> in) {
        std::lock_guard lock(mu);
        if (closed) throw TransportError("channel closed");
        data.insert(data.end(), in.begin(), in.end());
        cv.notify_all();
    }

    void read(std::span<uint8_t> out) {
        std::unique_lock lock(mu);
        size_t got = 0;
        while (got < out.size()) {
            cv.wait(lock, [&] { return !data.empty() || closed; });
            if (data.empty() && closed) throw TransportError("channel closed");
            while (got < out.size() && !data.empty()) {
                out[got++] = data.front();
                data.pop_front();
            }
        }
    }

    void close() {
        std::lock_guard lock(mu);
        closed = true;
        cv.notify_all();
    }
};

class LoopbackChannel final : public Channel {
  public:
    LoopbackChannel(std::shared_ptr<Pipe> out, std::shared_ptr<Pipe> in)
        : out_(std::move(out)), in_(std::move(in)) {}
    ~LoopbackChannel() override { close(); }

    void close() override {
        out_->close();
        in_->close();
    }

  protected:
    void write_all(std::span<const uint8_t> data) override { out_->write(data); }
    void read_all(std::span<uint8_t> out) override { in_->read(out); }

  private:
    std::shared_ptr<Pipe> out_, in_;
};

struct SslCtxDeleter {
    void operator()(SSL_CTX* p) const { SSL_CTX_free(p); }
};
struct SslDeleter {
    void operator()(SSL* p) const { SSL_free(p); }
};

std::unique_ptr<SSL_CTX, SslCtxDeleter> make_ssl_ctx(const TlsConfig& tls, bool server) {
    auto ctx = std::unique_ptr<SSL_CTX, SslCtxDeleter>(
        SSL_CTX_new(server ? TLS_server_method() : TLS_client_method()));
    if (!ctx) throw TransportError("SSL_CTX_new failed");
    if (!tls.cert_file.empty()) {
        if (SSL_CTX_use_certificate_chain_file(ctx.get(), tls.cert_file.c_str()) != 1 ||
            SSL_CTX_use_PrivateKey_file(ctx.get(), tls.key_file.c_str(),
                                        SSL_FILETYPE_PEM) != 1)
            throw TransportError("failed to load TLS certificate/key");
    }
    if (!tls.ca_file.empty()) {
        if (SSL_CTX_load_verify_locations(ctx.get(), tls.ca_file.c_str(), nullptr) != 1)
            throw TransportError("failed to load TLS CA file");
        SSL_CTX_set_verify(ctx.get(), SSL_VERIFY_PEER, nullptr);
    }
    return ctx;
}

class TcpChannel final : public Channel {
  public:
    TcpChannel(int fd, const TlsConfig& tls, bool server) : fd_(fd) {
        int flag = 1;
        setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &flag, sizeof(flag));
        if (tls.enabled) {
            ctx_ = make_ssl_ctx(tls, server);
            ssl_.reset(SSL_new(ctx_.get()));
            if (!ssl_) throw TransportError("SSL_new failed");
            SSL_set_fd(ssl_.get(), fd_);
            int rc = server ? SSL_accept(ssl_.get()) : SSL_connect(ssl_.get());
            if (rc != 1) throw TransportError("TLS handshake failed");
        }
    }

    ~TcpChannel() override { close(); }

    void close() override {
        if (fd_ >= 0) {
            if (ssl_) SSL_shutdown(ssl_.get());
            ::shutdown(fd_, SHUT_RDWR);
            ::close(fd_);
            fd_ = -1;
        }
    }

  protected:
    void write_all(std::span<const uint8_t> data) override {
        size_t sent = 0;
        while (sent < data.size()) {
            ssize_t n;
            if (ssl_)
                n = SSL_write(ssl_.get(), data.data() + sent, int(data.size() - sent));
            else
                n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
            if (n <= 0) throw TransportError("send failed or channel closed");
            sent += size_t(n);
        }
    }

    void read_all(std::span<uint8_t> out) override {
        size_t got = 0;
        while (got < out.size()) {
            ssize_t n;
            if (ssl_)
                n = SSL_read(ssl_.get(), out.data() + got, int(out.size() - got));
            else
                n = ::recv(fd_, out.data() + got, out.size() - got, 0);
            if (n <= 0) throw TransportError("recv failed or channel closed");
            got += size_t(n);
        }
    }

  private:
    int fd_;
    std::unique_ptr<SSL_CTX, SslCtxDeleter> ctx_;
    std::unique_ptr<SSL, SslDeleter> ssl_;
};

int resolve_and_connect(const std::string& host, uint16_t port) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    if (getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res) != 0)
        throw TransportError("cannot resolve " + host);
    int fd = -1;
    for (addrinfo* p = res; p; p = p->ai_next) {
        fd = socket(p->ai_family, p->ai_socktype, p->ai_protocol);
        if (fd < 0) continue;
        if (connect(fd, p->ai_addr, p->ai_addrlen) == 0) break;
        ::close(fd);
        fd = -1;
    }
    freeaddrinfo(res);
    if (fd < 0) throw TransportError("connection to " + host + " failed");
    return fd;
}

}  // namespace

std::pair<std::unique_ptr<Channel>, std::unique_ptr<Channel>> make_loopback_pair() {
    auto a2b = std::make_shared<Pipe>();
    auto b2a = std::make_shared<Pipe>();
    return {std::make_unique<LoopbackChannel>(a2b, b2a),
            std::make_unique<LoopbackChannel>(b2a, a2b)};
}

std::unique_ptr<Channel> tcp_connect(const std::string& host, uint16_t port,
                                     const TlsConfig& tls) {
    return std::make_unique<TcpChannel>(resolve_and_connect(host, port), tls, false);
}

TcpListener::TcpListener(const std::string& host, uint16_t port, const TlsConfig& tls)
    : tls_(tls) {
    fd_ = socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) throw TransportError("socket failed");
    int flag = 1;
    setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &flag, sizeof(flag));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (host.empty() || host == "0.0.0.0")
        addr.sin_addr.s_addr = INADDR_ANY;
    else if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1)
        throw TransportError("bad listen address " + host);
    if (bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0)
        throw TransportError("bind failed");
    if (listen(fd_, 4) != 0) throw TransportError("listen failed");
    socklen_t len = sizeof(addr);
    getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<Channel> TcpListener::accept_one() {
    int cfd = ::accept(fd_, nullptr, nullptr);
    if (cfd < 0) throw TransportError("accept failed");
    return std::make_unique<TcpChannel>(cfd, tls_, true);
}

}  // namespace kgtrade
