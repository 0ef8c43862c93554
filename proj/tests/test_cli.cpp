#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "kgtrade/graphgen.hpp"
#include "kgtrade/session.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("cli");

namespace {

const char* kCli = KGTRADE_CLI_PATH;

int run_cmd(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string tmp_path(const std::string& name) {
    return "/tmp/kgtrade_cli_" + std::to_string(getpid()) + "_" + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

nlohmann::ordered_json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return nlohmann::ordered_json::parse(ss.str());
}

struct Endpoints {
    std::string seller_graph = tmp_path("seller.nt");
    std::string buyer_graph = tmp_path("buyer.nt");
    std::string config = tmp_path("config.txt");
    std::string seller_report = tmp_path("seller.json");
    std::string buyer_report = tmp_path("buyer.json");
    int port;
    explicit Endpoints(int port_) : port(port_) {}
};

int run_pair(const Endpoints& ep, const std::string& extra_config = "") {
    write_file(ep.config, "rsa_bits=1024\nparts_n=2\nbuy_k=1\n" + extra_config);
    std::string seller_cmd = std::string(kCli) + " seller --graph " + ep.seller_graph +
                             " --listen 127.0.0.1:" + std::to_string(ep.port) +
                             " --report " + ep.seller_report + " >/dev/null 2>&1 &";
    REQUIRE(run_cmd(seller_cmd) == 0);
    std::this_thread::sleep_for(std::chrono::milliseconds(400));
    std::string buyer_cmd = std::string(kCli) + " buyer --graph " + ep.buyer_graph +
                            " --config " + ep.config + " --connect 127.0.0.1:" +
                            std::to_string(ep.port) + " --report " + ep.buyer_report +
                            " >/dev/null 2>&1";
    return run_cmd(buyer_cmd);
}

}  // namespace

TEST_CASE("missing graph file is a usage error") {
    CHECK(run_cmd(std::string(kCli) +
                  " buyer --graph /nonexistent.nt --connect 127.0.0.1:1 "
                  ">/dev/null 2>&1") == 2);
    CHECK(run_cmd(std::string(kCli) + " buyer >/dev/null 2>&1") == 2);
    CHECK(run_cmd(std::string(kCli) + " >/dev/null 2>&1") == 2);
}

TEST_CASE("generator writes parseable overlapping graphs") {
    Endpoints ep(34611);
    CHECK(run_cmd(std::string(kCli) + " gen --statements 80 --overlap 0.5 --seed 5 --out " +
                  ep.seller_graph + " --out2 " + ep.buyer_graph + " >/dev/null 2>&1") == 0);
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    KnowledgeGraph s = parse_ntriples(slurp(ep.seller_graph)).graph;
    KnowledgeGraph b = parse_ntriples(slurp(ep.buyer_graph)).graph;
    CHECK(s.size() == 80);
    CHECK(b.size() == 80);
    CHECK(graph_intersection(s, b).size() == 40);
}

TEST_CASE("identical graphs complete with full intersection") {
    Endpoints ep(34612);
    REQUIRE(run_cmd(std::string(kCli) + " gen --statements 60 --seed 6 --out " +
                    ep.seller_graph + " >/dev/null 2>&1") == 0);
    REQUIRE(run_cmd("cp " + ep.seller_graph + " " + ep.buyer_graph) == 0);
    CHECK(run_pair(ep) == 0);

    nlohmann::ordered_json report = read_json(ep.buyer_report);
    CHECK(report["outcome"] == "Closed");
    CHECK(report["intersection_size"] == 60);
    CHECK(report["verification"]["pass"] == true);
    CHECK(report["traffic"]["sent_bytes"].get<uint64_t>() > 0);

    nlohmann::ordered_json seller_report = read_json(ep.seller_report);
    CHECK(seller_report["outcome"] == "Closed");
}

TEST_CASE("declining after step2 exits with the abort code") {
    Endpoints ep(34613);
    REQUIRE(run_cmd(std::string(kCli) + " gen --statements 40 --overlap 0.5 --seed 7 --out " +
                    ep.seller_graph + " --out2 " + ep.buyer_graph + " >/dev/null 2>&1") == 0);
    CHECK(run_pair(ep, "continue_after_step2=false\n") == 3);
    nlohmann::ordered_json report = read_json(ep.buyer_report);
    CHECK(report["outcome"] == "Aborted");
    CHECK(report["abort_step"] == "step2");
}

TEST_SUITE_END();
