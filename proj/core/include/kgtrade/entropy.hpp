#pragma once

#include <map>
#include <optional>

#include "kgtrade/blindsig.hpp"
#include "kgtrade/bloom.hpp"
#include "kgtrade/kg.hpp"

namespace kgtrade {

enum class EntropyMetricId : uint8_t {
    SUBJECTS = 0,
    PREDICATES,
    OBJECTS,
    RESOURCES,
    SUBJ_PRED,
    PRED_OBJ_DESC,  // "description of subjects": one predicate-object pair per statement
    SUBJ_OBJ,
    STATEMENTS,
    LITERALS,
};

inline constexpr std::array<EntropyMetricId, 9> kAllEntropyMetrics = {
    EntropyMetricId::SUBJECTS,   EntropyMetricId::PREDICATES,
    EntropyMetricId::OBJECTS,    EntropyMetricId::RESOURCES,
    EntropyMetricId::SUBJ_PRED,  EntropyMetricId::PRED_OBJ_DESC,
    EntropyMetricId::SUBJ_OBJ,   EntropyMetricId::STATEMENTS,
    EntropyMetricId::LITERALS,
};

const char* metric_name(EntropyMetricId id);
std::optional<EntropyMetricId> metric_from_name(const std::string& name);

/// How many statement positions one multiset element covers (1 for single
/// projections, 2 for pairs, 3 for whole statements).
unsigned metric_arity(EntropyMetricId id);

class Multiset {
  public:
    void add(std::string element, uint64_t count = 1);

    uint64_t cardinality() const { return cardinality_; }
    size_t distinct() const { return counts_.size(); }
    uint64_t count(const std::string& element) const;
    const std::map<std::string, uint64_t>& counts() const { return counts_; }

  private:
    std::map<std::string, uint64_t> counts_;
    uint64_t cardinality_ = 0;
};

Multiset derive_multiset(const KnowledgeGraph& g, EntropyMetricId metric);

/// H = -sum (c/N) log2 (c/N); empty multiset yields 0.
double shannon_entropy(const Multiset& ms);

/// Entropy of the nonzero-counter distribution minus log2(k); exact when
/// collision-free, the plain computation when k=1.
double entropy_from_counters(const std::vector<uint32_t>& counters, uint32_t k);

/// One counting_insert of signed_digest(element, sign_direct(element)) per
/// distinct element, with its multiplicity. Byte-identical on rebuild.
CountingBloomFilter seller_build_counting_filter(const Multiset& ms,
                                                 const BlindKeyPair& keys, double p,
                                                 const FilterSeed& seed);

struct EntropyResult {
    EntropyMetricId metric = EntropyMetricId::PRED_OBJ_DESC;
    double h_buyer = 0.0;
    double h_merged_estimate = 0.0;
    double gain = 0.0;
    bool uncorrected = false;  // computed without the Step-2 intersection
    /// Buyer elements that hit a nonzero filter cell (candidate shared
    /// elements); feeds the leak ledger's realized counts.
    uint64_t matched_elements = 0;
};

/// Merges the Buyer's residual multiset (buyer graph minus the intersection)
/// into the Seller's counting filter and estimates the union entropy. When
/// `intersection` is null the result is flagged uncorrected and elements in
/// both graphs are double counted.
EntropyResult buyer_merged_entropy(const KnowledgeGraph& buyer_graph,
                                   const KnowledgeGraph* intersection,
                                   EntropyMetricId metric,
                                   const CountingBloomFilter& filter,
                                   const std::map<std::string, Signature>& sigs,
                                   const PublicKey& pub);

}  // namespace kgtrade
