#include "kgtrade/entropy.hpp"

#include <cmath>
#include <set>

namespace kgtrade {

const char* metric_name(EntropyMetricId id) {
    switch (id) {
        case EntropyMetricId::SUBJECTS: return "subjects";
        case EntropyMetricId::PREDICATES: return "predicates";
        case EntropyMetricId::OBJECTS: return "objects";
        case EntropyMetricId::RESOURCES: return "resources";
        case EntropyMetricId::SUBJ_PRED: return "subject_predicate";
        case EntropyMetricId::PRED_OBJ_DESC: return "desc";
        case EntropyMetricId::SUBJ_OBJ: return "subject_object";
        case EntropyMetricId::STATEMENTS: return "statements";
        case EntropyMetricId::LITERALS: return "literals";
    }
    throw ParamError("unknown entropy metric id");
}

std::optional<EntropyMetricId> metric_from_name(const std::string& name) {
    for (EntropyMetricId id : kAllEntropyMetrics)
        if (name == metric_name(id)) return id;
    return std::nullopt;
}

unsigned metric_arity(EntropyMetricId id) {
    switch (id) {
        case EntropyMetricId::SUBJECTS:
        case EntropyMetricId::PREDICATES:
        case EntropyMetricId::OBJECTS:
        case EntropyMetricId::RESOURCES:
        case EntropyMetricId::LITERALS: return 1;
        case EntropyMetricId::SUBJ_PRED:
        case EntropyMetricId::PRED_OBJ_DESC:
        case EntropyMetricId::SUBJ_OBJ: return 2;
        case EntropyMetricId::STATEMENTS: return 3;
    }
    throw ParamError("unknown entropy metric id");
}

void Multiset::add(std::string element, uint64_t count) {
    if (count == 0) return;
    counts_[std::move(element)] += count;
    cardinality_ += count;
}

uint64_t Multiset::count(const std::string& element) const {
    auto it = counts_.find(element);
    return it == counts_.end() ? 0 : it->second;
}

Multiset derive_multiset(const KnowledgeGraph& g, EntropyMetricId metric) {
    Multiset ms;
    for (const Statement& s : g.statements()) {
        switch (metric) {
            case EntropyMetricId::SUBJECTS: ms.add(s.subject.token()); break;
            case EntropyMetricId::PREDICATES: ms.add(s.predicate.token()); break;
            case EntropyMetricId::OBJECTS: ms.add(s.object.token()); break;
            case EntropyMetricId::RESOURCES:
                ms.add(s.subject.token());
                ms.add(s.predicate.token());
                ms.add(s.object.token());
                break;
            case EntropyMetricId::SUBJ_PRED:
                ms.add(s.subject.token() + " " + s.predicate.token());
                break;
            case EntropyMetricId::PRED_OBJ_DESC:
                ms.add(s.predicate.token() + " " + s.object.token());
                break;
            case EntropyMetricId::SUBJ_OBJ:
                ms.add(s.subject.token() + " " + s.object.token());
                break;
            case EntropyMetricId::STATEMENTS: ms.add(canonical_string(s)); break;
            case EntropyMetricId::LITERALS:
                if (!s.object.is_iri()) ms.add(s.object.token());
                break;
        }
    }
    return ms;
}

double shannon_entropy(const Multiset& ms) {
    if (ms.cardinality() == 0) return 0.0;
    double n = double(ms.cardinality());
    double h = 0.0;
    for (auto& [_, c] : ms.counts()) {
        double p = double(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

double entropy_from_counters(const std::vector<uint32_t>& counters, uint32_t k) {
    if (k < 1) throw ParamError("k must be >= 1");
    uint64_t total = 0;
    for (uint32_t c : counters) total += c;
    if (total == 0) return 0.0;
    double n = double(total);
    double h = 0.0;
    for (uint32_t c : counters) {
        if (c == 0) continue;
        double p = double(c) / n;
        h -= p * std::log2(p);
    }
    return std::max(0.0, h - std::log2(double(k)));
}

CountingBloomFilter seller_build_counting_filter(const Multiset& ms,
                                                 const BlindKeyPair& keys, double p,
                                                 const FilterSeed& seed) {
    uint64_t n = std::max<uint64_t>(1, ms.distinct());
    CountingBloomFilter filter(counting_params(n, p, seed));
    PublicKey pub = keys.pub();
    for (auto& [element, count] : ms.counts()) {
        Bytes bytes = to_bytes(element);
        Signature sig = sign_direct(bytes, keys);
        filter.insert(signed_digest(bytes, sig, pub), uint32_t(count));
    }
    return filter;
}

EntropyResult buyer_merged_entropy(const KnowledgeGraph& buyer_graph,
                                   const KnowledgeGraph* intersection,
                                   EntropyMetricId metric,
                                   const CountingBloomFilter& filter,
                                   const std::map<std::string, Signature>& sigs,
                                   const PublicKey& pub) {
    EntropyResult result;
    result.metric = metric;
    result.uncorrected = intersection == nullptr;

    Multiset buyer_full = derive_multiset(buyer_graph, metric);
    result.h_buyer = shannon_entropy(buyer_full);

    auto digest_of = [&](const std::string& element) {
        auto it = sigs.find(element);
        if (it == sigs.end())
            throw ProtocolError("missing signature for multiset element");
        return signed_digest(to_bytes(element), it->second, pub);
    };

    // Compensated counters: subtract the contribution of the shared
    // statements cell by cell. When the Seller's graph is a subset of the
    // Buyer's this drains every cell exactly, collisions included.
    std::vector<uint32_t> comp(filter.counters().begin(), filter.counters().end());
    if (intersection) {
        Multiset shared = derive_multiset(*intersection, metric);
        for (auto& [element, count] : shared.counts()) {
            Digest dg = digest_of(element);
            for (uint64_t pos : hash_positions(filter.params(), dg))
                comp[pos] -= std::min<uint32_t>(comp[pos], uint32_t(count));
        }
    }

    // Each Buyer element absorbs whatever the compensated cells still hold
    // for it; leftover nonzero cells then contribute one element each.
    std::set<uint64_t> touched;
    std::vector<double> combined;
    combined.reserve(buyer_full.distinct());
    for (auto& [element, count] : buyer_full.counts()) {
        Digest dg = digest_of(element);
        uint32_t extra = UINT32_MAX;
        for (uint64_t pos : hash_positions(filter.params(), dg)) {
            extra = std::min(extra, comp[pos]);
            touched.insert(pos);
        }
        if (filter.count_query(dg) > 0) ++result.matched_elements;
        combined.push_back(double(count + extra));
    }
    for (uint64_t i = 0; i < filter.params().m; ++i)
        if (comp[i] > 0 && !touched.count(i)) combined.push_back(double(comp[i]));

    double total = 0.0;
    for (double c : combined) total += c;
    double h = 0.0;
    if (total > 0) {
        for (double c : combined) {
            double p = c / total;
            if (p > 0) h -= p * std::log2(p);
        }
        // A k>1 filter over-counts collisions structurally; apply the same
        // correction as entropy_from_counters.
        if (filter.params().k > 1) h = std::max(0.0, h - std::log2(double(filter.params().k)));
    }
    result.h_merged_estimate = h;
    result.gain = result.h_merged_estimate - result.h_buyer;
    return result;
}

}  // namespace kgtrade
