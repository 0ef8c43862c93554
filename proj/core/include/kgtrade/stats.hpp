#pragma once

#include <array>

#include "kgtrade/kg.hpp"
#include "json.hpp"

namespace kgtrade {

inline constexpr size_t kStatisticCount = 33;

/// Fixed, order-stable catalog of 33 per-graph measures. The order is part
/// of the wire contract and must never change.
struct GraphStatistics {
    std::array<double, kStatisticCount> values{};

    static const std::array<const char*, kStatisticCount>& names();

    double operator[](size_t i) const { return values[i]; }
    bool operator==(const GraphStatistics&) const = default;

    nlohmann::ordered_json to_json() const;
    static GraphStatistics from_json(const nlohmann::ordered_json& j);
};

GraphStatistics compute_statistics(const KnowledgeGraph& g);

}  // namespace kgtrade
