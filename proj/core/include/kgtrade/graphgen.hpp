#pragma once

#include "kgtrade/kg.hpp"

namespace kgtrade {

/// Synthetic graph generator for tests and benchmarks. Deterministic given
/// the seed.
struct GraphGenConfig {
    size_t statements = 1000;
    size_t subject_pool = 0;    // 0: statements / 4
    size_t predicate_pool = 0;  // 0: 16
    size_t object_pool = 0;     // 0: statements / 2
    double literal_fraction = 0.2;
    uint64_t seed = 1;
    std::string prefix = "http://example.org/";
};

KnowledgeGraph generate_graph(const GraphGenConfig& cfg);

struct GraphPair {
    KnowledgeGraph seller;
    KnowledgeGraph buyer;
};

/// Two graphs of cfg.statements each sharing roughly overlap_fraction of the
/// Seller's statements; the Buyer side is filled up with disjoint statements.
GraphPair generate_pair(const GraphGenConfig& cfg, double overlap_fraction);

}  // namespace kgtrade
