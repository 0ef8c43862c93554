#include "kgtrade/leak.hpp"

#include <algorithm>

namespace kgtrade {

const char* direction_name(Direction d) {
    return d == Direction::seller_to_buyer ? "seller_to_buyer" : "buyer_to_seller";
}

const char* model_name(AdversaryModel m) {
    switch (m) {
        case AdversaryModel::fair: return "fair";
        case AdversaryModel::curious: return "curious";
        case AdversaryModel::malicious: return "malicious";
    }
    throw ParamError("unknown adversary model");
}

const char* LeakCounters::metric_label(size_t i) {
    static const char* kLabels[kMetricCount] = {
        "il_amount",     "il_statements", "il_resources", "il_subjects",
        "il_predicates", "il_objects",    "il_structural",
    };
    return kLabels[i];
}

namespace {

using Row = std::array<uint64_t, LeakCounters::kMetricCount>;

uint64_t max_delta(const Row& r) {
    uint64_t m = 0;
    for (size_t i = LeakCounters::statements; i < LeakCounters::kMetricCount; ++i)
        m = std::max(m, r[i]);
    return m;
}

/// Which statement positions one element of the metric's multiset covers.
void projection_positions(EntropyMetricId id, bool& subj, bool& pred, bool& obj) {
    subj = pred = obj = false;
    switch (id) {
        case EntropyMetricId::SUBJECTS: subj = true; break;
        case EntropyMetricId::PREDICATES: pred = true; break;
        case EntropyMetricId::OBJECTS: obj = true; break;
        case EntropyMetricId::LITERALS: obj = true; break;
        case EntropyMetricId::RESOURCES: subj = pred = obj = true; break;
        case EntropyMetricId::SUBJ_PRED: subj = pred = true; break;
        case EntropyMetricId::PRED_OBJ_DESC: pred = obj = true; break;
        case EntropyMetricId::SUBJ_OBJ: subj = obj = true; break;
        case EntropyMetricId::STATEMENTS: subj = pred = obj = true; break;
    }
}

}  // namespace

void LeakLedger::apply(const std::string& step, Direction d, Row realized, Row ceiling) {
    // ILAmount moves with every other metric.
    realized[LeakCounters::amount] =
        std::max(realized[LeakCounters::amount], max_delta(realized));
    ceiling[LeakCounters::amount] =
        std::max(ceiling[LeakCounters::amount], max_delta(ceiling));
    for (size_t i = 0; i < LeakCounters::kMetricCount; ++i) {
        totals_[size_t(d)].realized[i] += realized[i];
        totals_[size_t(d)].ceiling[i] += ceiling[i];
    }
    entries_.push_back(Entry{step, d, realized, ceiling});
}

void LeakLedger::record_statistics_shared(uint64_t count) {
    if (count == 0) return;
    Row r{};
    r[LeakCounters::structural] = count;
    r[LeakCounters::amount] = count;
    apply("step1_statistics", Direction::seller_to_buyer, r, r);
}

void LeakLedger::record_intersection(const IntersectionCounts& c, AdversaryModel model) {
    bool curious = model != AdversaryModel::fair;

    Row realized{};
    realized[LeakCounters::statements] = 3 * c.n;
    realized[LeakCounters::resources] = c.resources;
    realized[LeakCounters::subjects] = c.subjects;
    realized[LeakCounters::predicates] = c.predicates;
    realized[LeakCounters::objects] = c.objects;
    realized[LeakCounters::structural] = curious ? 1 : 0;

    Row ceiling{};
    ceiling[LeakCounters::statements] = 3 * c.n;
    ceiling[LeakCounters::resources] = 3 * c.n;
    ceiling[LeakCounters::subjects] = c.n;
    ceiling[LeakCounters::predicates] = c.n;
    ceiling[LeakCounters::objects] = c.n;
    ceiling[LeakCounters::structural] = curious ? 1 : 0;
    apply("step2_intersection", Direction::seller_to_buyer, realized, ceiling);

    Row back{};
    back[LeakCounters::structural] = 1;  // the signature count
    apply("step2_intersection", Direction::buyer_to_seller, back, back);
}

void LeakLedger::record_entropy_metric(EntropyMetricId metric, AdversaryModel model,
                                       uint64_t i_s, uint64_t e_s, uint64_t e_b,
                                       uint64_t matched_elements) {
    const uint64_t a = metric_arity(metric);
    const std::string step = std::string("step3_entropy_") + metric_name(metric);
    bool subj, pred, obj;
    projection_positions(metric, subj, pred, obj);

    if (model == AdversaryModel::fair) {
        Row r{};
        r[LeakCounters::structural] = 2;
        r[LeakCounters::amount] = 2;
        apply(step, Direction::seller_to_buyer, r, r);
        return;
    }

    const uint64_t matched = matched_elements;
    Row realized{};
    realized[LeakCounters::statements] = a * matched;
    realized[LeakCounters::resources] = a * matched;
    realized[LeakCounters::subjects] = subj ? matched : 0;
    realized[LeakCounters::predicates] = pred ? matched : 0;
    realized[LeakCounters::objects] = obj ? matched : 0;
    realized[LeakCounters::structural] = 3;
    realized[LeakCounters::amount] = a * matched + matched + 3;

    Row ceiling{};
    ceiling[LeakCounters::statements] = a * i_s;
    ceiling[LeakCounters::resources] = std::min(a * e_s, a * e_b);
    ceiling[LeakCounters::subjects] = subj ? std::min(e_s, e_b) : 0;
    ceiling[LeakCounters::predicates] = pred ? std::min(e_s, e_b) : 0;
    ceiling[LeakCounters::objects] = obj ? std::min(e_s, e_b) : 0;
    ceiling[LeakCounters::structural] = 3;
    ceiling[LeakCounters::amount] = a * i_s + e_b + 3;
    apply(step, Direction::seller_to_buyer, realized, ceiling);

    Row back{};
    back[LeakCounters::structural] = 1;
    apply(step, Direction::buyer_to_seller, back, back);
}

void LeakLedger::record_ot(const OtCounts& c) {
    if (c.statements == 0) return;
    Row r{};
    r[LeakCounters::statements] = 3 * c.statements;
    r[LeakCounters::resources] = c.resources;
    r[LeakCounters::subjects] = c.subjects;
    r[LeakCounters::predicates] = c.predicates;
    r[LeakCounters::objects] = c.objects;
    apply("step4_transfer", Direction::seller_to_buyer, r, r);
}

nlohmann::ordered_json LeakLedger::report() const {
    nlohmann::ordered_json j;
    for (Direction d : {Direction::seller_to_buyer, Direction::buyer_to_seller}) {
        nlohmann::ordered_json tot;
        const LeakCounters& c = totals_[size_t(d)];
        for (size_t i = 0; i < LeakCounters::kMetricCount; ++i) {
            tot[LeakCounters::metric_label(i)] = c.realized[i];
            tot[std::string(LeakCounters::metric_label(i)) + "_ceiling"] = c.ceiling[i];
        }
        j["totals"][direction_name(d)] = std::move(tot);
    }
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const Entry& e : entries_) {
        nlohmann::ordered_json je;
        je["step"] = e.step;
        je["direction"] = direction_name(e.direction);
        for (size_t i = 0; i < LeakCounters::kMetricCount; ++i) {
            je[LeakCounters::metric_label(i)] = e.realized[i];
            je[std::string(LeakCounters::metric_label(i)) + "_ceiling"] = e.ceiling[i];
        }
        steps.push_back(std::move(je));
    }
    j["steps"] = std::move(steps);
    return j;
}

}  // namespace kgtrade
