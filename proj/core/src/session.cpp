#include "kgtrade/session.hpp"

#include <openssl/rand.h>

#include <algorithm>

namespace kgtrade {

namespace {

constexpr uint8_t kProtocolVersion = 1;

uint64_t random_u64() {
    uint8_t b[8];
    if (RAND_bytes(b, 8) != 1) throw CryptoError("entropy failure");
    uint64_t v = 0;
    for (uint8_t x : b) v = v << 8 | x;
    return v;
}

std::string seed_hex(const FilterSeed& s) {
    return to_hex(s);
}

FilterSeed seed_from_hex(const std::string& h) {
    Bytes b = from_hex(h);
    if (b.size() != 16) throw ParamError("filter seed must be 16 bytes");
    FilterSeed s;
    std::copy(b.begin(), b.end(), s.begin());
    return s;
}

uint8_t step_tag(const std::string& step) {
    if (step == "step1") return 1;
    if (step == "step2") return 2;
    if (step == "step3") return 3;
    if (step == "step4") return 4;
    if (step == "step5") return 5;
    return 0;
}

/// Internal control flow for a session that must stop.
struct AbortNow {
    std::string step;
    std::string reason;
    bool notify_peer;
};

class Endpoint {
  public:
    Endpoint(Channel& ch, Transcript& transcript, Direction outgoing)
        : ch_(ch), transcript_(transcript), outgoing_(outgoing) {}

    void set_step(std::string step) {
        step_ = std::move(step);
        ch_.set_step(step_);
    }
    const std::string& step() const { return step_; }

    void send(MsgType type, Bytes payload) {
        Frame f{type, std::move(payload)};
        ch_.send_frame(f);
        transcript_.append(step_, outgoing_, type, f.payload);
    }

    Frame recv() {
        Frame f = ch_.recv_frame();
        transcript_.append(step_, incoming(), f.type, f.payload);
        if (f.type == MsgType::ABORT) {
            ByteReader r(f.payload);
            uint8_t at = r.u8();
            throw AbortNow{"step" + std::to_string(at), "peer: " + r.blob_str(), false};
        }
        return f;
    }

    Frame expect(MsgType type) {
        Frame f = recv();
        if (f.type != type)
            throw AbortNow{step_,
                           std::string("protocol violation: expected ") +
                               msg_type_name(type) + ", got " + msg_type_name(f.type),
                           true};
        return f;
    }

    void send_abort(const std::string& reason) {
        ByteWriter w;
        w.u8(step_tag(step_));
        w.blob(reason);
        try {
            send(MsgType::ABORT, w.take());
        } catch (const TransportError&) {
        }
    }

    void send_continue() {
        ByteWriter w;
        w.u8(step_tag(step_));
        send(MsgType::CONTINUE, w.take());
    }

    void expect_continue() {
        expect(MsgType::CONTINUE);
    }

  private:
    Direction incoming() const {
        return outgoing_ == Direction::seller_to_buyer ? Direction::buyer_to_seller
                                                       : Direction::seller_to_buyer;
    }

    Channel& ch_;
    Transcript& transcript_;
    Direction outgoing_;
    std::string step_ = "step1";
};

LeakLedger::IntersectionCounts intersection_counts(const KnowledgeGraph& g) {
    LeakLedger::IntersectionCounts c;
    c.n = g.size();
    std::set<Term> subs, preds, objs, res;
    for (const Statement& s : g.statements()) {
        subs.insert(s.subject);
        preds.insert(s.predicate);
        objs.insert(s.object);
        res.insert(s.subject);
        res.insert(s.predicate);
        res.insert(s.object);
    }
    c.subjects = subs.size();
    c.predicates = preds.size();
    c.objects = objs.size();
    c.resources = res.size();
    return c;
}

LeakLedger::OtCounts ot_counts(const KnowledgeGraph& g) {
    LeakLedger::OtCounts c;
    c.statements = g.size();
    std::set<Term> subs, preds, objs, res;
    for (const Statement& s : g.statements()) {
        subs.insert(s.subject);
        preds.insert(s.predicate);
        objs.insert(s.object);
        res.insert(s.subject);
        res.insert(s.predicate);
        res.insert(s.object);
    }
    c.subjects = subs.size();
    c.predicates = preds.size();
    c.objects = objs.size();
    c.resources = res.size();
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// SessionConfig

FilterSeed SessionConfig::metric_seed(EntropyMetricId id) const {
    FilterSeed s = cbf_filter_seed;
    s[15] ^= uint8_t(uint8_t(id) + 1);
    return s;
}

nlohmann::ordered_json SessionConfig::to_json() const {
    nlohmann::ordered_json j;
    j["psi_fpr"] = psi_fpr;
    j["cbf_fpr"] = cbf_fpr;
    std::vector<std::string> names;
    for (EntropyMetricId m : metrics) names.push_back(metric_name(m));
    j["metrics"] = names;
    j["parts_n"] = parts_n;
    j["buy_k"] = buy_k;
    j["signature_budget"] = signature_budget;
    j["exclusion_predicates"] = exclusion_predicates;
    j["decoy_count"] = decoy_count;
    j["rsa_bits"] = rsa_bits;
    j["psi_filter_seed"] = seed_hex(psi_filter_seed);
    j["cbf_filter_seed"] = seed_hex(cbf_filter_seed);
    j["psi_noise_fraction"] = psi_noise_fraction;
    j["partition_strategy"] = strategy_name(partition_strategy);
    return j;
}

SessionConfig SessionConfig::from_json(const nlohmann::ordered_json& j) {
    SessionConfig c;
    c.psi_fpr = j.at("psi_fpr").get<double>();
    c.cbf_fpr = j.at("cbf_fpr").get<double>();
    c.metrics.clear();
    for (const auto& name : j.at("metrics")) {
        auto id = metric_from_name(name.get<std::string>());
        if (!id) throw ParamError("unknown metric name: " + name.get<std::string>());
        c.metrics.push_back(*id);
    }
    c.parts_n = j.at("parts_n").get<size_t>();
    c.buy_k = j.at("buy_k").get<size_t>();
    c.signature_budget = j.at("signature_budget").get<uint64_t>();
    c.exclusion_predicates =
        j.at("exclusion_predicates").get<std::vector<std::string>>();
    c.decoy_count = j.at("decoy_count").get<size_t>();
    c.rsa_bits = j.at("rsa_bits").get<int>();
    c.psi_filter_seed = seed_from_hex(j.at("psi_filter_seed").get<std::string>());
    c.cbf_filter_seed = seed_from_hex(j.at("cbf_filter_seed").get<std::string>());
    c.psi_noise_fraction = j.at("psi_noise_fraction").get<double>();
    std::string strat = j.at("partition_strategy").get<std::string>();
    if (strat == "random")
        c.partition_strategy = PartitionStrategy::random;
    else if (strat == "balanced_clustered")
        c.partition_strategy = PartitionStrategy::balanced_clustered;
    else
        throw ParamError("unknown partition strategy: " + strat);
    if (c.buy_k < 1 || c.buy_k > c.parts_n) throw ParamError("require 1 <= k <= n");
    return c;
}

KnowledgeGraph apply_exclusions(const KnowledgeGraph& g, const SessionConfig& config) {
    if (config.exclusion_predicates.empty()) return g;
    std::set<std::string> excluded(config.exclusion_predicates.begin(),
                                   config.exclusion_predicates.end());
    KnowledgeGraph out;
    for (const Statement& s : g.statements())
        if (!excluded.count(s.predicate.lexical)) out.insert(s);
    return out;
}

// ---------------------------------------------------------------------------
// Transcript / state names

const char* state_name(SessionState s) {
    switch (s) {
        case SessionState::Init: return "Init";
        case SessionState::Step1Done: return "Step1Done";
        case SessionState::SignaturesServed: return "SignaturesServed";
        case SessionState::FiltersSent: return "FiltersSent";
        case SessionState::Step3Done: return "Step3Done";
        case SessionState::Step4Done: return "Step4Done";
        case SessionState::Closed: return "Closed";
        case SessionState::Aborted: return "Aborted";
    }
    return "?";
}

void Transcript::append(std::string step, Direction d, MsgType type,
                        std::span<const uint8_t> payload) {
    records.push_back(Record{std::move(step), d, type, payload.size(), sha256(payload)});
}

std::vector<Digest> Transcript::digests_of(MsgType type) const {
    std::vector<Digest> out;
    for (const Record& r : records)
        if (r.type == type) out.push_back(r.digest);
    return out;
}

uint64_t Transcript::bytes(Direction d) const {
    uint64_t t = 0;
    for (const Record& r : records)
        if (r.direction == d) t += r.length;
    return t;
}

// ---------------------------------------------------------------------------
// Disclosure

nlohmann::ordered_json Disclosure::to_json() const {
    nlohmann::ordered_json j;
    j["graph"] = serialize_ntriples(graph);
    j["n"] = n.to_hex();
    j["e"] = e.to_hex();
    j["d"] = d.to_hex();
    j["p"] = p.to_hex();
    j["q"] = q.to_hex();
    std::vector<std::string> keys;
    for (const SymKey& k : part_keys) keys.push_back(to_hex(k));
    j["part_keys"] = keys;
    j["permutation"] = permutation;
    std::vector<std::string> xs;
    for (const Bn& x : nonces) xs.push_back(x.to_hex());
    j["nonces"] = xs;
    j["partition_seed"] = partition_seed;
    j["shuffle_seed"] = shuffle_seed;
    j["noise_seed"] = noise_seed;
    return j;
}

Disclosure Disclosure::from_json(const nlohmann::ordered_json& j) {
    Disclosure d;
    d.graph = parse_ntriples(j.at("graph").get<std::string>()).graph;
    d.n = Bn::from_hex(j.at("n").get<std::string>());
    d.e = Bn::from_hex(j.at("e").get<std::string>());
    d.d = Bn::from_hex(j.at("d").get<std::string>());
    d.p = Bn::from_hex(j.at("p").get<std::string>());
    d.q = Bn::from_hex(j.at("q").get<std::string>());
    for (const auto& k : j.at("part_keys")) {
        Bytes b = from_hex(k.get<std::string>());
        if (b.size() != 32) throw ParamError("bad part key length");
        SymKey sk;
        std::copy(b.begin(), b.end(), sk.begin());
        d.part_keys.push_back(sk);
    }
    d.permutation = j.at("permutation").get<std::vector<size_t>>();
    for (const auto& x : j.at("nonces"))
        d.nonces.push_back(Bn::from_hex(x.get<std::string>()));
    d.partition_seed = j.at("partition_seed").get<uint64_t>();
    d.shuffle_seed = j.at("shuffle_seed").get<uint64_t>();
    d.noise_seed = j.at("noise_seed").get<uint64_t>();
    return d;
}

// ---------------------------------------------------------------------------
// Seller

SellerOutcome run_seller(Channel& ch, const KnowledgeGraph& input_graph,
                         const SellerOptions& options) {
    SellerOutcome out;
    Endpoint ep(ch, out.transcript, Direction::seller_to_buyer);
    try {
        ep.set_step("step1");
        Frame hello = ep.expect(MsgType::HELLO);
        {
            ByteWriter w;
            w.u8(kProtocolVersion);
            ep.send(MsgType::HELLO, w.take());
        }

        Frame cfg_frame = ep.expect(MsgType::CONFIG);
        SessionConfig config;
        try {
            auto j = nlohmann::ordered_json::parse(
                std::string(cfg_frame.payload.begin(), cfg_frame.payload.end()));
            config = SessionConfig::from_json(j);
        } catch (const std::exception& e) {
            throw AbortNow{"step1", std::string("bad config: ") + e.what(), true};
        }
        if (config.signature_budget > options.max_signature_budget)
            throw AbortNow{"step1", "config rejected: signature budget too large", true};
        if (config.rsa_bits < 1024)
            throw AbortNow{"step1", "config rejected: modulus too small", true};
        out.config = config;

        BlindKeyPair key = options.key ? *options.key : keygen(config.rsa_bits);
        KnowledgeGraph graph = apply_exclusions(input_graph, config);

        // Accept: echo the config and attach the signing public key.
        {
            nlohmann::ordered_json j;
            j["config"] = config.to_json();
            j["public_key"]["n"] = key.n.to_hex();
            j["public_key"]["e"] = key.e.to_hex();
            ep.send(MsgType::CONFIG, to_bytes(j.dump()));
        }

        GraphStatistics stats = compute_statistics(graph);
        ep.send(MsgType::STATS, to_bytes(stats.to_json().dump()));
        out.ledger.record_statistics_shared(kStatisticCount);
        out.state = SessionState::Step1Done;

        // Blind-signature phase: the PSI batch plus one batch per metric, all
        // served before any filter bytes leave.
        uint64_t signed_total = 0;
        const size_t batch_count = 1 + config.metrics.size();
        for (size_t b = 0; b < batch_count; ++b) {
            Frame f = ep.expect(MsgType::BLIND_BATCH);
            auto [purpose, values] = wire::decode_batch(f.payload);
            wire::BatchPurpose expected =
                b == 0 ? wire::BatchPurpose::for_psi()
                       : wire::BatchPurpose::for_metric(config.metrics[b - 1]);
            if (!(purpose == expected))
                throw AbortNow{ep.step(), "unexpected batch purpose", true};
            signed_total += values.size();
            if (signed_total > config.signature_budget)
                throw AbortNow{ep.step(), "signature budget exceeded", true};
            std::vector<Bn> sigs = sign_batch(values, key, options.sign_workers);
            ep.send(MsgType::SIGNED_BATCH, wire::encode_batch(purpose, sigs));
        }
        out.state = SessionState::SignaturesServed;

        ep.set_step("step2");
        uint64_t noise_seed =
            options.noise_seed ? *options.noise_seed : random_u64();
        BloomFilter psi_filter =
            seller_build_filter(graph, key, config.psi_fpr, config.psi_filter_seed);
        if (config.psi_noise_fraction > 0.0)
            psi_filter.add_noise(config.psi_noise_fraction, noise_seed);
        ep.send(MsgType::PSI_FILTER, psi_filter.encode());
        out.state = SessionState::FiltersSent;

        ep.expect_continue();
        ep.set_step("step3");
        for (EntropyMetricId metric : config.metrics) {
            Multiset ms = derive_multiset(graph, metric);
            CountingBloomFilter cf = seller_build_counting_filter(
                ms, key, config.cbf_fpr, config.metric_seed(metric));
            ep.send(MsgType::COUNTING_FILTER, wire::encode_counting_filter(metric, cf));
        }
        out.state = SessionState::Step3Done;

        ep.expect_continue();
        ep.set_step("step4");
        if (graph.size() < config.parts_n)
            throw AbortNow{"step4", "fewer statements than parts", true};
        uint64_t partition_seed =
            options.partition_seed ? *options.partition_seed : random_u64();
        uint64_t shuffle_seed =
            options.shuffle_seed ? *options.shuffle_seed : random_u64();
        Partition partition = make_partition(graph, config.parts_n, partition_seed,
                                             config.partition_strategy);
        auto [setup, secrets] = seller_prepare(partition, key, shuffle_seed);
        ep.send(MsgType::OT_SETUP, wire::encode_ot_setup(setup));

        Frame reqf = ep.expect(MsgType::OT_REQUEST);
        OTRequest request = wire::decode_ot_request(reqf.payload);
        if (request.values.size() != config.buy_k)
            throw AbortNow{"step4", "OT request size differs from negotiated k", true};
        OTResponse resp = seller_respond(request, secrets, setup, key);
        ep.send(MsgType::OT_RESPONSE, wire::encode_ot_response(resp));
        out.state = SessionState::Step4Done;

        ep.expect_continue();
        ep.set_step("step5");
        Disclosure disclosure;
        disclosure.graph = graph;
        disclosure.n = key.n;
        disclosure.e = key.e;
        disclosure.d = key.d;
        disclosure.p = key.p;
        disclosure.q = key.q;
        disclosure.part_keys = secrets.keys;
        disclosure.permutation = secrets.permutation;
        disclosure.nonces = setup.nonces;
        disclosure.partition_seed = partition_seed;
        disclosure.shuffle_seed = shuffle_seed;
        disclosure.noise_seed = noise_seed;
        ep.send(MsgType::DISCLOSURE, to_bytes(disclosure.to_json().dump()));
        out.state = SessionState::Closed;
        (void)hello;
    } catch (const AbortNow& a) {
        if (a.notify_peer) ep.send_abort(a.reason);
        out.state = SessionState::Aborted;
        out.abort_step = a.step;
        out.abort_reason = a.reason;
    } catch (const TransportError& e) {
        out.state = SessionState::Aborted;
        out.abort_step = "transport";
        out.abort_reason = e.what();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Buyer

BuyerOutcome run_buyer(Channel& ch, const KnowledgeGraph& input_graph,
                       const SessionConfig& config, const BuyerOptions& options) {
    BuyerOutcome out;
    out.config = config;
    Endpoint ep(ch, out.transcript, Direction::buyer_to_seller);
    DecisionCallback decide =
        options.decide ? options.decide : [](const std::string&) { return true; };
    auto decision_gate = [&](const std::string& step) {
        if (!decide(step)) throw AbortNow{step, "user declined to continue", true};
    };

    try {
        ep.set_step("step1");
        {
            ByteWriter w;
            w.u8(kProtocolVersion);
            ep.send(MsgType::HELLO, w.take());
        }
        ep.expect(MsgType::HELLO);

        std::string proposed = config.to_json().dump();
        ep.send(MsgType::CONFIG, to_bytes(proposed));
        Frame accepted = ep.expect(MsgType::CONFIG);
        PublicKey pub;
        try {
            auto j = nlohmann::ordered_json::parse(
                std::string(accepted.payload.begin(), accepted.payload.end()));
            if (j.at("config").dump() != config.to_json().dump())
                throw AbortNow{"step1", "seller accepted a different config", true};
            pub.n = Bn::from_hex(j.at("public_key").at("n").get<std::string>());
            pub.e = Bn::from_hex(j.at("public_key").at("e").get<std::string>());
        } catch (const AbortNow&) {
            throw;
        } catch (const std::exception& e) {
            throw AbortNow{"step1", std::string("bad config acceptance: ") + e.what(),
                           true};
        }
        out.retained.seller_pub = pub;

        Frame statsf = ep.expect(MsgType::STATS);
        try {
            out.seller_stats = GraphStatistics::from_json(nlohmann::ordered_json::parse(
                std::string(statsf.payload.begin(), statsf.payload.end())));
        } catch (const std::exception& e) {
            throw AbortNow{"step1", std::string("bad statistics: ") + e.what(), true};
        }
        out.ledger.record_statistics_shared(kStatisticCount);
        out.state = SessionState::Step1Done;
        decision_gate("step1");

        KnowledgeGraph graph = apply_exclusions(input_graph, config);

        // PSI batch.
        out.retained.psi_requests =
            buyer_prepare_requests(graph, pub, config.decoy_count);
        ep.send(MsgType::BLIND_BATCH,
                wire::encode_batch(wire::BatchPurpose::for_psi(),
                                   out.retained.psi_requests.blinded));
        Frame psi_signed = ep.expect(MsgType::SIGNED_BATCH);
        auto [psi_purpose, psi_blinded_sigs] = wire::decode_batch(psi_signed.payload);
        if (!(psi_purpose == wire::BatchPurpose::for_psi()) ||
            psi_blinded_sigs.size() != out.retained.psi_requests.blinded.size())
            throw AbortNow{"step1", "malformed PSI signature batch", true};
        std::vector<Signature> psi_sigs;
        for (size_t i = 0; i < out.retained.psi_requests.order.size(); ++i)
            psi_sigs.push_back(unblind(psi_blinded_sigs[i],
                                       out.retained.psi_requests.secrets[i], pub));

        // One batch per negotiated metric, all before any filter arrives.
        std::vector<std::map<std::string, Signature>> metric_sigs;
        for (EntropyMetricId metric : config.metrics) {
            Multiset ms = derive_multiset(graph, metric);
            BlindRequests reqs;
            std::vector<std::string> elements;
            for (auto& [element, _] : ms.counts()) {
                BlindingFactor r = make_blinding_factor(pub);
                reqs.blinded.push_back(blind(to_bytes(element), r, pub));
                reqs.secrets.push_back(std::move(r));
                elements.push_back(element);
            }
            ep.send(MsgType::BLIND_BATCH,
                    wire::encode_batch(wire::BatchPurpose::for_metric(metric),
                                       reqs.blinded));
            Frame sf = ep.expect(MsgType::SIGNED_BATCH);
            auto [purpose, blinded_sigs] = wire::decode_batch(sf.payload);
            if (!(purpose == wire::BatchPurpose::for_metric(metric)) ||
                blinded_sigs.size() != reqs.blinded.size())
                throw AbortNow{"step1", "malformed metric signature batch", true};
            std::map<std::string, Signature> sigs;
            for (size_t i = 0; i < elements.size(); ++i) {
                Signature sig = unblind(blinded_sigs[i], reqs.secrets[i], pub);
                if (!verify(to_bytes(elements[i]), sig, pub))
                    throw AbortNow{"step1",
                                   "Seller returned an invalid signature (misbehavior)",
                                   true};
                sigs.emplace(elements[i], std::move(sig));
            }
            metric_sigs.push_back(std::move(sigs));
            out.retained.metric_requests.emplace_back(metric, std::move(reqs));
            out.retained.metric_elements.push_back(std::move(elements));
        }
        out.state = SessionState::SignaturesServed;

        ep.set_step("step2");
        Frame filterf = ep.expect(MsgType::PSI_FILTER);
        BloomFilter psi_filter = BloomFilter::decode(filterf.payload);
        try {
            out.intersection = buyer_compute_intersection(out.retained.psi_requests,
                                                          psi_sigs, psi_filter, pub);
        } catch (const ProtocolError& e) {
            throw AbortNow{"step2", e.what(), true};
        }
        out.ledger.record_intersection(intersection_counts(out.intersection->statements),
                                       options.model);
        out.state = SessionState::FiltersSent;
        decision_gate("step2");
        ep.send_continue();

        ep.set_step("step3");
        for (size_t mi = 0; mi < config.metrics.size(); ++mi) {
            EntropyMetricId metric = config.metrics[mi];
            Frame cff = ep.expect(MsgType::COUNTING_FILTER);
            auto [got_metric, cf] = wire::decode_counting_filter(cff.payload);
            if (got_metric != metric)
                throw AbortNow{"step3", "counting filter for unexpected metric", true};
            EntropyResult er =
                buyer_merged_entropy(graph, &out.intersection->statements, metric, cf,
                                     metric_sigs[mi], pub);
            uint64_t nonzero = 0;
            for (uint32_t c : cf.counters())
                if (c) ++nonzero;
            out.ledger.record_entropy_metric(metric, options.model, cf.total(), nonzero,
                                             out.retained.metric_elements[mi].size(),
                                             er.matched_elements);
            out.entropies.push_back(er);
        }
        out.state = SessionState::Step3Done;
        decision_gate("step3");
        ep.send_continue();

        ep.set_step("step4");
        Frame setupf = ep.expect(MsgType::OT_SETUP);
        OTSetup setup = wire::decode_ot_setup(setupf.payload);
        if (setup.envelopes.size() != config.parts_n ||
            setup.nonces.size() != config.parts_n)
            throw AbortNow{"step4", "OT setup size differs from negotiated n", true};
        std::vector<size_t> indices = buyer_choose(config.buy_k, config.parts_n);
        auto [request, ot_secrets] = buyer_request(indices, setup);
        ep.send(MsgType::OT_REQUEST, wire::encode_ot_request(request));
        Frame respf = ep.expect(MsgType::OT_RESPONSE);
        OTResponse response = wire::decode_ot_response(respf.payload);
        out.parts = buyer_recover(response, ot_secrets, setup);
        out.retained.ot_setup = std::move(setup);
        out.retained.ot_secrets = std::move(ot_secrets);
        for (const RecoveredPart& part : out.parts) {
            if (!part.integrity_ok) {
                out.ot_integrity_ok = false;
                continue;
            }
            out.recovered_graph = graph_union(out.recovered_graph, part.statements);
        }
        out.ledger.record_ot(ot_counts(out.recovered_graph));
        out.state = SessionState::Step4Done;
        decision_gate("step4");
        ep.send_continue();

        ep.set_step("step5");
        Frame df = ep.expect(MsgType::DISCLOSURE);
        try {
            out.disclosure = Disclosure::from_json(nlohmann::ordered_json::parse(
                std::string(df.payload.begin(), df.payload.end())));
        } catch (const std::exception& e) {
            throw AbortNow{"step5", std::string("bad disclosure: ") + e.what(), true};
        }
        out.state = SessionState::Closed;
    } catch (const AbortNow& a) {
        if (a.notify_peer) ep.send_abort(a.reason);
        out.state = SessionState::Aborted;
        out.abort_step = a.step;
        out.abort_reason = a.reason;
    } catch (const TransportError& e) {
        out.state = SessionState::Aborted;
        out.abort_step = "transport";
        out.abort_reason = e.what();
    }
    return out;
}

}  // namespace kgtrade
