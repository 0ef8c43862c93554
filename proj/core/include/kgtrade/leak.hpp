#pragma once

#include "kgtrade/entropy.hpp"
#include "json.hpp"

namespace kgtrade {

enum class Direction : uint8_t {
    seller_to_buyer = 0,
    buyer_to_seller = 1,
};

enum class AdversaryModel : uint8_t {
    fair = 0,
    curious = 1,
    malicious = 2,
};

const char* direction_name(Direction d);
const char* model_name(AdversaryModel m);

/// The per-direction IL* counters; each holds the realized count from the
/// actual run plus the accumulated analytic ceiling.
struct LeakCounters {
    enum Metric {
        amount = 0,
        statements,
        resources,
        subjects,
        predicates,
        objects,
        structural,
        kMetricCount,
    };

    std::array<uint64_t, kMetricCount> realized{};
    std::array<uint64_t, kMetricCount> ceiling{};

    static const char* metric_label(size_t i);
};

class LeakLedger {
  public:
    struct Entry {
        std::string step;
        Direction direction;
        std::array<uint64_t, LeakCounters::kMetricCount> realized{};
        std::array<uint64_t, LeakCounters::kMetricCount> ceiling{};
    };

    /// Step 1: each statistic adds one to ILStructural (and ILAmount) S->B.
    void record_statistics_shared(uint64_t count);

    struct IntersectionCounts {
        uint64_t n = 0;  // statements in the intersection
        uint64_t subjects = 0;
        uint64_t predicates = 0;
        uint64_t objects = 0;
        uint64_t resources = 0;
    };
    /// Step 2: ILStatements S->B = 3n; curious and malicious buyers also read
    /// the filter cardinality (one structural item); the signature count
    /// always leaks one structural item B->S.
    void record_intersection(const IntersectionCounts& c, AdversaryModel model);

    /// Step 3, per metric. i_s/e_s/e_b per the run; matched_elements is the
    /// number of buyer elements found in the Seller filter (realized basis).
    void record_entropy_metric(EntropyMetricId metric, AdversaryModel model, uint64_t i_s,
                               uint64_t e_s, uint64_t e_b, uint64_t matched_elements);

    struct OtCounts {
        uint64_t statements = 0;
        uint64_t subjects = 0;
        uint64_t predicates = 0;
        uint64_t objects = 0;
        uint64_t resources = 0;
    };
    /// Step 4: complete knowledge of the recovered parts, nothing more.
    void record_ot(const OtCounts& received);

    const LeakCounters& counters(Direction d) const {
        return totals_[size_t(d)];
    }
    const std::vector<Entry>& entries() const { return entries_; }

    nlohmann::ordered_json report() const;

  private:
    void apply(const std::string& step, Direction d,
               std::array<uint64_t, LeakCounters::kMetricCount> realized,
               std::array<uint64_t, LeakCounters::kMetricCount> ceiling);

    std::array<LeakCounters, 2> totals_;
    std::vector<Entry> entries_;
};

}  // namespace kgtrade
