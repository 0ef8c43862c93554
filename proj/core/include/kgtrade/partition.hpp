#pragma once

#include "kgtrade/kg.hpp"

namespace kgtrade {

enum class PartitionStrategy : uint8_t {
    random = 0,
    balanced_clustered = 1,
};

const char* strategy_name(PartitionStrategy s);

struct Partition {
    std::vector<std::set<Statement>> parts;  // pairwise disjoint, union = input
    PartitionStrategy strategy = PartitionStrategy::random;
    uint64_t seed = 0;
};

/// Uniform random split into n parts whose sizes differ by at most one.
/// Deterministic given seed. Throws ParamError when n > |g| or n < 1.
Partition partition_random(const KnowledgeGraph& g, size_t n, uint64_t seed);

/// Parts grown by breadth-first expansion from n spread-out seed nodes with a
/// per-part cap of ceil(|g|/n); parts stay connected (undirected view)
/// whenever the component structure allows. Leftovers go to the smallest
/// parts.
Partition partition_balanced_clustered(const KnowledgeGraph& g, size_t n, uint64_t seed);

Partition make_partition(const KnowledgeGraph& g, size_t n, uint64_t seed,
                         PartitionStrategy strategy);

}  // namespace kgtrade
