#include <thread>

#include "doctest.h"
#include "kgtrade/graphgen.hpp"
#include "kgtrade/session.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("session");

namespace {

const BlindKeyPair& test_key() {
    static BlindKeyPair key = keygen(1024);
    return key;
}

SessionConfig small_config() {
    SessionConfig c;
    c.rsa_bits = 1024;
    c.parts_n = 3;
    c.buy_k = 1;
    c.metrics = {EntropyMetricId::PRED_OBJ_DESC};
    c.psi_filter_seed[0] = 0x11;
    c.cbf_filter_seed[0] = 0x22;
    return c;
}

struct SessionRun {
    SellerOutcome seller;
    BuyerOutcome buyer;
};

SessionRun run_loopback(const KnowledgeGraph& seller_graph,
                        const KnowledgeGraph& buyer_graph, const SessionConfig& config,
                        SellerOptions soptions = {}, BuyerOptions boptions = {}) {
    if (!soptions.key) soptions.key = test_key();
    auto [s_ch, b_ch] = make_loopback_pair();
    SessionRun run;
    std::thread seller([&] { run.seller = run_seller(*s_ch, seller_graph, soptions); });
    run.buyer = run_buyer(*b_ch, buyer_graph, config, boptions);
    seller.join();
    return run;
}

using FrameMutator = std::function<void(Frame&)>;

/// Forwards frames between two channel ends, applying `mut` to each frame.
void pump(Channel& from, Channel& to, const FrameMutator& mut) {
    try {
        for (;;) {
            Frame f = from.recv_frame();
            if (mut) mut(f);
            to.send_frame(f);
        }
    } catch (const TransportError&) {
        from.close();
        to.close();
    }
}

/// Runs a session with a man-in-the-middle mutating Seller-to-Buyer frames.
SessionRun run_tampered(const KnowledgeGraph& seller_graph,
                        const KnowledgeGraph& buyer_graph, const SessionConfig& config,
                        const FrameMutator& mut) {
    SellerOptions soptions;
    soptions.key = test_key();
    auto [s_ch, proxy_s] = make_loopback_pair();
    auto [proxy_b, b_ch] = make_loopback_pair();
    SessionRun run;
    std::thread seller([&] { run.seller = run_seller(*s_ch, seller_graph, soptions); });
    std::thread fwd_s2b([&] { pump(*proxy_s, *proxy_b, mut); });
    std::thread fwd_b2s([&] { pump(*proxy_b, *proxy_s, nullptr); });
    run.buyer = run_buyer(*b_ch, buyer_graph, config, {});
    b_ch->close();
    s_ch->close();
    seller.join();
    fwd_s2b.join();
    fwd_b2s.join();
    return run;
}

size_t first_index_of(const Transcript& t, MsgType type) {
    for (size_t i = 0; i < t.records.size(); ++i)
        if (t.records[i].type == type) return i;
    return SIZE_MAX;
}

size_t last_index_of(const Transcript& t, MsgType type) {
    size_t out = SIZE_MAX;
    for (size_t i = 0; i < t.records.size(); ++i)
        if (t.records[i].type == type) out = i;
    return out;
}

}  // namespace

TEST_CASE("honest session closes with consistent results") {
    GraphGenConfig gc;
    gc.statements = 120;
    gc.seed = 81;
    GraphPair pair = generate_pair(gc, 0.5);
    SessionConfig config = small_config();
    SessionRun run = run_loopback(pair.seller, pair.buyer, config);

    REQUIRE(run.seller.state == SessionState::Closed);
    REQUIRE(run.buyer.state == SessionState::Closed);
    REQUIRE(run.buyer.intersection.has_value());
    CHECK(run.buyer.intersection->statements ==
          graph_intersection(pair.buyer, pair.seller));
    REQUIRE(run.buyer.entropies.size() == 1);
    CHECK(run.buyer.ot_integrity_ok);
    CHECK(run.buyer.recovered_graph.size() > 0);
    for (const Statement& s : run.buyer.recovered_graph.statements())
        CHECK(pair.seller.contains(s));
    REQUIRE(run.buyer.disclosure.has_value());
    CHECK(run.buyer.disclosure->graph == pair.seller);
    REQUIRE(run.buyer.seller_stats.has_value());
    CHECK((*run.buyer.seller_stats)[0] == double(pair.seller.size()));

    // Both verification modes accept the honest run.
    VerificationReport exact = verify_disclosure(*run.buyer.disclosure, run.buyer,
                                                 pair.buyer, VerifyMode::exact);
    CHECK(exact.all_pass());
    VerificationReport fast = verify_disclosure(*run.buyer.disclosure, run.buyer,
                                                pair.buyer, VerifyMode::fast);
    CHECK(fast.all_pass());

    // Signatures are all served before any filter bytes.
    for (const Transcript* t : {&run.seller.transcript, &run.buyer.transcript}) {
        size_t last_batch = last_index_of(*t, MsgType::SIGNED_BATCH);
        size_t first_filter = std::min(first_index_of(*t, MsgType::PSI_FILTER),
                                       first_index_of(*t, MsgType::COUNTING_FILTER));
        REQUIRE(last_batch != SIZE_MAX);
        REQUIRE(first_filter != SIZE_MAX);
        CHECK(last_batch < first_filter);
    }

    // Transcripts agree between the parties.
    REQUIRE(run.seller.transcript.records.size() == run.buyer.transcript.records.size());
    for (size_t i = 0; i < run.seller.transcript.records.size(); ++i) {
        CHECK(run.seller.transcript.records[i].digest ==
              run.buyer.transcript.records[i].digest);
        CHECK(run.seller.transcript.records[i].type == run.buyer.transcript.records[i].type);
    }
}

TEST_CASE("declining after step2 stops the session before any filter metrics flow") {
    GraphGenConfig gc;
    gc.statements = 60;
    gc.seed = 82;
    GraphPair pair = generate_pair(gc, 0.5);
    BuyerOptions boptions;
    boptions.decide = [](const std::string& step) { return step != "step2"; };
    SessionRun run = run_loopback(pair.seller, pair.buyer, small_config(), {}, boptions);

    CHECK(run.buyer.state == SessionState::Aborted);
    CHECK(run.buyer.abort_step == "step2");
    CHECK(run.seller.state == SessionState::Aborted);
    CHECK(first_index_of(run.seller.transcript, MsgType::COUNTING_FILTER) == SIZE_MAX);
    CHECK(first_index_of(run.buyer.transcript, MsgType::COUNTING_FILTER) == SIZE_MAX);
    // The PSI step itself still completed.
    CHECK(run.buyer.intersection.has_value());
}

TEST_CASE("signature budget is enforced") {
    GraphGenConfig gc;
    gc.statements = 50;
    gc.seed = 83;
    GraphPair pair = generate_pair(gc, 0.5);
    SessionConfig config = small_config();
    config.signature_budget = 10;  // far below one batch
    SessionRun run = run_loopback(pair.seller, pair.buyer, config);
    CHECK(run.seller.state == SessionState::Aborted);
    CHECK(run.seller.abort_reason == "signature budget exceeded");
    CHECK(run.buyer.state == SessionState::Aborted);
}

TEST_CASE("seller rejects an oversized budget request") {
    GraphGenConfig gc;
    gc.statements = 30;
    gc.seed = 84;
    GraphPair pair = generate_pair(gc, 0.5);
    SessionConfig config = small_config();
    config.signature_budget = 1'000'000;
    SellerOptions soptions;
    soptions.max_signature_budget = 1000;
    SessionRun run = run_loopback(pair.seller, pair.buyer, config, soptions);
    CHECK(run.seller.state == SessionState::Aborted);
    CHECK(run.buyer.state == SessionState::Aborted);
    CHECK(run.buyer.abort_reason.find("budget") != std::string::npos);
}

TEST_CASE("exclusion predicates are stripped on both sides") {
    ParseResult pr = parse_ntriples(
        "<http://ex.org/a> <http://ex.org/keep> <http://ex.org/x> .\n"
        "<http://ex.org/a> <http://ex.org/secret> <http://ex.org/y> .\n"
        "<http://ex.org/b> <http://ex.org/keep> <http://ex.org/x> .\n"
        "<http://ex.org/c> <http://ex.org/keep> <http://ex.org/z> .\n");
    SessionConfig config = small_config();
    config.parts_n = 1;
    config.exclusion_predicates = {"http://ex.org/secret"};
    SessionRun run = run_loopback(pr.graph, pr.graph, config);
    REQUIRE(run.buyer.state == SessionState::Closed);
    CHECK(run.buyer.intersection->statements.size() == 3);
    for (const Statement& s : run.buyer.disclosure->graph.statements())
        CHECK(s.predicate.lexical != "http://ex.org/secret");
}

TEST_CASE("buyer rejects a misordered seller") {
    // A Seller that sends the PSI filter before answering the blind batches.
    GraphGenConfig gc;
    gc.statements = 30;
    gc.seed = 85;
    GraphPair pair = generate_pair(gc, 0.5);
    const BlindKeyPair& key = test_key();

    auto [s_ch, b_ch] = make_loopback_pair();
    std::thread bad_seller([&] {
        try {
            (void)s_ch->recv_frame();  // HELLO
            ByteWriter w;
            w.u8(1);
            s_ch->send_frame({MsgType::HELLO, w.take()});
            Frame cfg = s_ch->recv_frame();  // CONFIG
            nlohmann::ordered_json j;
            j["config"] = nlohmann::ordered_json::parse(
                std::string(cfg.payload.begin(), cfg.payload.end()));
            j["public_key"]["n"] = key.n.to_hex();
            j["public_key"]["e"] = key.e.to_hex();
            s_ch->send_frame({MsgType::CONFIG, to_bytes(j.dump())});
            s_ch->send_frame(
                {MsgType::STATS, to_bytes(compute_statistics(pair.seller).to_json().dump())});
            (void)s_ch->recv_frame();  // BLIND_BATCH, ignored
            BloomFilter filter = seller_build_filter(pair.seller, key, 1e-9, {});
            s_ch->send_frame({MsgType::PSI_FILTER, filter.encode()});
            (void)s_ch->recv_frame();  // ABORT expected here
        } catch (const TransportError&) {
        }
    });
    BuyerOutcome buyer = run_buyer(*b_ch, pair.buyer, small_config(), {});
    b_ch->close();
    bad_seller.join();

    CHECK(buyer.state == SessionState::Aborted);
    CHECK(buyer.abort_reason.find("SIGNED_BATCH") != std::string::npos);
}

TEST_CASE("tampered statistics are detected by exact verification") {
    GraphGenConfig gc;
    gc.statements = 60;
    gc.seed = 86;
    GraphPair pair = generate_pair(gc, 0.5);
    SessionRun run =
        run_tampered(pair.seller, pair.buyer, small_config(), [](Frame& f) {
            if (f.type == MsgType::STATS) {
                auto j = nlohmann::ordered_json::parse(
                    std::string(f.payload.begin(), f.payload.end()));
                j["statements"] = j["statements"].get<double>() * 2;
                f.payload = to_bytes(j.dump());
            }
        });
    REQUIRE(run.buyer.state == SessionState::Closed);
    VerificationReport rep = verify_disclosure(*run.buyer.disclosure, run.buyer,
                                               pair.buyer, VerifyMode::exact);
    CHECK(!rep.all_pass());
    bool stats_failed = false;
    for (const VerificationCheck& c : rep.checks)
        if (c.name == "replay-stats" && !c.pass) stats_failed = true;
    CHECK(stats_failed);
}

TEST_CASE("per step traffic is metered") {
    GraphGenConfig gc;
    gc.statements = 40;
    gc.seed = 87;
    GraphPair pair = generate_pair(gc, 0.5);
    SessionConfig config = small_config();

    SellerOptions soptions;
    soptions.key = test_key();
    auto [s_ch, b_ch] = make_loopback_pair();
    SellerOutcome soutcome;
    std::thread seller([&] { soutcome = run_seller(*s_ch, pair.seller, soptions); });
    BuyerOutcome boutcome = run_buyer(*b_ch, pair.buyer, config, {});
    seller.join();
    REQUIRE(boutcome.state == SessionState::Closed);

    const TrafficMeter& m = b_ch->meter();
    for (const char* step : {"step1", "step2", "step3", "step4", "step5"})
        CHECK(m.step_total(step, false) + m.step_total(step, true) > 0);
    // Transcript byte totals match the meter.
    CHECK(boutcome.transcript.bytes(Direction::seller_to_buyer) == m.total(false));
    CHECK(boutcome.transcript.bytes(Direction::buyer_to_seller) == m.total(true));
}

TEST_CASE("config json round trip") {
    SessionConfig c = small_config();
    c.exclusion_predicates = {"http://ex.org/p"};
    c.decoy_count = 5;
    c.psi_noise_fraction = 0.01;
    c.metrics = {EntropyMetricId::SUBJECTS, EntropyMetricId::STATEMENTS};
    SessionConfig back = SessionConfig::from_json(c.to_json());
    CHECK(back == c);
    auto j = c.to_json();
    j["buy_k"] = 9;  // > parts_n
    CHECK_THROWS_AS(SessionConfig::from_json(j), ParamError);
}

TEST_CASE("disclosure json round trip") {
    GraphGenConfig gc;
    gc.statements = 25;
    gc.seed = 88;
    GraphPair pair = generate_pair(gc, 0.5);
    SessionRun run = run_loopback(pair.seller, pair.buyer, small_config());
    REQUIRE(run.buyer.disclosure.has_value());
    Disclosure d = *run.buyer.disclosure;
    Disclosure back = Disclosure::from_json(d.to_json());
    CHECK(back.graph == d.graph);
    CHECK(back.n == d.n);
    CHECK(back.d == d.d);
    CHECK(back.part_keys == d.part_keys);
    CHECK(back.permutation == d.permutation);
    CHECK(back.partition_seed == d.partition_seed);
}

TEST_SUITE_END();
