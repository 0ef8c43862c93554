#pragma once

#include <functional>
#include <optional>

#include "kgtrade/leak.hpp"
#include "kgtrade/net.hpp"
#include "kgtrade/psi.hpp"
#include "kgtrade/stats.hpp"
#include "kgtrade/wire.hpp"

namespace kgtrade {

struct SessionConfig {
    double psi_fpr = 1e-9;
    double cbf_fpr = 1e-6;
    std::vector<EntropyMetricId> metrics = {EntropyMetricId::PRED_OBJ_DESC};
    size_t parts_n = 4;
    size_t buy_k = 1;
    uint64_t signature_budget = 1'000'000;
    std::vector<std::string> exclusion_predicates;  // stripped before processing
    size_t decoy_count = 0;
    int rsa_bits = 2048;
    FilterSeed psi_filter_seed{};
    FilterSeed cbf_filter_seed{};  // per-metric seeds derived from this base
    double psi_noise_fraction = 0.0;
    PartitionStrategy partition_strategy = PartitionStrategy::balanced_clustered;

    FilterSeed metric_seed(EntropyMetricId id) const;

    nlohmann::ordered_json to_json() const;
    static SessionConfig from_json(const nlohmann::ordered_json& j);
    bool operator==(const SessionConfig&) const = default;
};

enum class SessionState : uint8_t {
    Init = 0,
    Step1Done,
    SignaturesServed,
    FiltersSent,
    Step3Done,
    Step4Done,
    Closed,
    Aborted,
};

const char* state_name(SessionState s);

struct Transcript {
    struct Record {
        std::string step;
        Direction direction;
        MsgType type;
        uint64_t length = 0;
        Digest digest{};
    };
    std::vector<Record> records;

    void append(std::string step, Direction d, MsgType type,
                std::span<const uint8_t> payload);
    /// Digests of every record of one type, in order.
    std::vector<Digest> digests_of(MsgType type) const;
    uint64_t bytes(Direction d) const;
};

/// Everything the Seller releases in Step 5; sufficient to replay Steps 2-4.
struct Disclosure {
    KnowledgeGraph graph;
    Bn n, e, d, p, q;
    std::vector<SymKey> part_keys;        // aligned with envelope order
    std::vector<size_t> permutation;      // envelope t held part permutation[t]
    std::vector<Bn> nonces;
    uint64_t partition_seed = 0;
    uint64_t shuffle_seed = 0;
    uint64_t noise_seed = 0;

    BlindKeyPair keypair() const { return BlindKeyPair{n, e, d, p, q}; }

    nlohmann::ordered_json to_json() const;
    static Disclosure from_json(const nlohmann::ordered_json& j);
};

// ---------------------------------------------------------------------------
// Seller

struct SellerOptions {
    std::optional<BlindKeyPair> key;  // generated per session when absent
    std::optional<uint64_t> partition_seed;
    std::optional<uint64_t> shuffle_seed;
    std::optional<uint64_t> noise_seed;
    uint64_t max_signature_budget = 10'000'000;
    unsigned sign_workers = 1;
    AdversaryModel model = AdversaryModel::curious;
};

struct SellerOutcome {
    SessionState state = SessionState::Init;
    std::string abort_step;
    std::string abort_reason;
    Transcript transcript;
    LeakLedger ledger;
    SessionConfig config;
};

SellerOutcome run_seller(Channel& ch, const KnowledgeGraph& graph,
                         const SellerOptions& options = {});

// ---------------------------------------------------------------------------
// Buyer

/// Called at each step boundary; returning false aborts the session.
using DecisionCallback = std::function<bool(const std::string& step)>;

struct BuyerOptions {
    DecisionCallback decide;  // defaults to always-continue
    AdversaryModel model = AdversaryModel::curious;
};

/// Buyer-side secrets retained for Step-5 verification.
struct BuyerRetained {
    BlindRequests psi_requests;
    std::vector<std::pair<EntropyMetricId, BlindRequests>> metric_requests;
    /// Multiset element (string) per real request index, aligned with
    /// metric_requests order.
    std::vector<std::vector<std::string>> metric_elements;
    std::optional<OTSetup> ot_setup;
    OTBuyerSecrets ot_secrets;
    PublicKey seller_pub;
};

struct BuyerOutcome {
    SessionState state = SessionState::Init;
    std::string abort_step;
    std::string abort_reason;
    Transcript transcript;
    LeakLedger ledger;
    SessionConfig config;

    std::optional<GraphStatistics> seller_stats;
    std::optional<IntersectionResult> intersection;
    std::vector<EntropyResult> entropies;
    std::vector<RecoveredPart> parts;
    KnowledgeGraph recovered_graph;
    bool ot_integrity_ok = true;
    std::optional<Disclosure> disclosure;
    BuyerRetained retained;
};

BuyerOutcome run_buyer(Channel& ch, const KnowledgeGraph& graph,
                       const SessionConfig& config, const BuyerOptions& options = {});

// ---------------------------------------------------------------------------
// Step-5 verification

enum class VerifyMode : uint8_t { exact, fast };

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
};

/// Re-derives every Seller artifact from the disclosure and compares it to
/// the transcript (exact mode), or recomputes intersection/entropies with
/// plain sets and multisets (fast mode).
VerificationReport verify_disclosure(const Disclosure& disclosure,
                                     const BuyerOutcome& outcome,
                                     const KnowledgeGraph& own_graph, VerifyMode mode);

/// Strips statements whose predicate is listed in the config's exclusions.
KnowledgeGraph apply_exclusions(const KnowledgeGraph& g, const SessionConfig& config);

}  // namespace kgtrade
