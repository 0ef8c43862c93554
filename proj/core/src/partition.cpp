#include "kgtrade/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

namespace kgtrade {

const char* strategy_name(PartitionStrategy s) {
    switch (s) {
        case PartitionStrategy::random: return "random";
        case PartitionStrategy::balanced_clustered: return "balanced_clustered";
    }
    throw ParamError("unknown partition strategy");
}

namespace {

void check_args(const KnowledgeGraph& g, size_t n) {
    if (n < 1) throw ParamError("part count must be >= 1");
    if (n > g.size()) throw ParamError("part count exceeds statement count");
}

}  // namespace

Partition partition_random(const KnowledgeGraph& g, size_t n, uint64_t seed) {
    check_args(g, n);
    std::vector<Statement> stmts(g.statements().begin(), g.statements().end());
    std::mt19937_64 rng(seed);
    std::shuffle(stmts.begin(), stmts.end(), rng);

    Partition out;
    out.strategy = PartitionStrategy::random;
    out.seed = seed;
    out.parts.resize(n);
    size_t base = stmts.size() / n, extra = stmts.size() % n;
    size_t pos = 0;
    for (size_t i = 0; i < n; ++i) {
        size_t take = base + (i < extra ? 1 : 0);
        for (size_t j = 0; j < take; ++j) out.parts[i].insert(stmts[pos++]);
    }
    return out;
}

Partition partition_balanced_clustered(const KnowledgeGraph& g, size_t n, uint64_t seed) {
    check_args(g, n);
    std::vector<Statement> stmts(g.statements().begin(), g.statements().end());
    const size_t total = stmts.size();
    const size_t cap = (total + n - 1) / n;

    // Undirected node graph over subjects and objects.
    std::map<Term, std::vector<size_t>> incident;
    for (size_t i = 0; i < total; ++i) {
        incident[stmts[i].subject].push_back(i);
        incident[stmts[i].object].push_back(i);
    }
    std::vector<Term> nodes;
    nodes.reserve(incident.size());
    for (auto& [t, _] : incident) nodes.push_back(t);

    // Seed nodes spread apart: start from the lowest-degree node, then
    // repeatedly take the node farthest from every chosen seed.
    std::map<Term, size_t> node_index;
    for (size_t i = 0; i < nodes.size(); ++i) node_index[nodes[i]] = i;
    auto neighbors = [&](size_t ni) {
        std::vector<size_t> out;
        for (size_t si : incident[nodes[ni]]) {
            const Statement& s = stmts[si];
            size_t a = node_index[s.subject], b = node_index[s.object];
            out.push_back(a == ni ? b : a);
        }
        return out;
    };

    std::vector<size_t> seeds;
    {
        size_t best = 0;
        for (size_t i = 1; i < nodes.size(); ++i)
            if (incident[nodes[i]].size() < incident[nodes[best]].size()) best = i;
        seeds.push_back(best);
        const size_t INF = SIZE_MAX;
        while (seeds.size() < n && seeds.size() < nodes.size()) {
            std::vector<size_t> dist(nodes.size(), INF);
            std::deque<size_t> q;
            for (size_t s : seeds) {
                dist[s] = 0;
                q.push_back(s);
            }
            while (!q.empty()) {
                size_t u = q.front();
                q.pop_front();
                for (size_t v : neighbors(u))
                    if (dist[v] == INF) {
                        dist[v] = dist[u] + 1;
                        q.push_back(v);
                    }
            }
            size_t far = SIZE_MAX;
            for (size_t i = 0; i < nodes.size(); ++i) {
                if (std::find(seeds.begin(), seeds.end(), i) != seeds.end()) continue;
                if (far == SIZE_MAX || dist[i] > dist[far]) far = i;
            }
            if (far == SIZE_MAX) break;
            seeds.push_back(far);
        }
    }

    std::vector<bool> assigned(total, false);
    std::vector<std::set<Statement>> parts(n);
    std::vector<std::deque<size_t>> frontier(n);
    std::vector<std::set<size_t>> seen_nodes(n);
    std::mt19937_64 rng(seed);  // reserved for tie-breaking extensions
    (void)rng;
    for (size_t i = 0; i < seeds.size(); ++i) {
        frontier[i].push_back(seeds[i]);
        seen_nodes[i].insert(seeds[i]);
    }

    auto grow_one = [&](size_t p) -> bool {
        if (parts[p].size() >= cap) return false;
        while (!frontier[p].empty()) {
            size_t ni = frontier[p].front();
            bool took = false;
            for (size_t si : incident[nodes[ni]]) {
                if (assigned[si]) continue;
                assigned[si] = true;
                parts[p].insert(stmts[si]);
                for (const Term* t : {&stmts[si].subject, &stmts[si].object}) {
                    size_t other = node_index[*t];
                    if (seen_nodes[p].insert(other).second) frontier[p].push_back(other);
                }
                took = true;
                break;
            }
            if (took) return true;
            frontier[p].pop_front();
        }
        return false;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t p = 0; p < n; ++p)
            if (grow_one(p)) progress = true;
    }

    // Leftovers (blocked or disconnected) go to the smallest parts.
    auto smallest = [&](bool prefer_empty) {
        size_t best = 0;
        for (size_t p = 1; p < n; ++p)
            if (parts[p].size() < parts[best].size()) best = p;
        (void)prefer_empty;
        return best;
    };
    for (size_t si = 0; si < total; ++si) {
        if (assigned[si]) continue;
        assigned[si] = true;
        parts[smallest(false)].insert(stmts[si]);
    }

    // No part may stay empty when |g| >= n.
    for (size_t p = 0; p < n; ++p) {
        while (parts[p].empty()) {
            size_t largest = 0;
            for (size_t q2 = 1; q2 < n; ++q2)
                if (parts[q2].size() > parts[largest].size()) largest = q2;
            if (parts[largest].size() <= 1) break;
            auto it = std::prev(parts[largest].end());
            parts[p].insert(*it);
            parts[largest].erase(it);
        }
    }

    Partition out;
    out.strategy = PartitionStrategy::balanced_clustered;
    out.seed = seed;
    out.parts = std::move(parts);
    return out;
}

Partition make_partition(const KnowledgeGraph& g, size_t n, uint64_t seed,
                         PartitionStrategy strategy) {
    switch (strategy) {
        case PartitionStrategy::random: return partition_random(g, n, seed);
        case PartitionStrategy::balanced_clustered:
            return partition_balanced_clustered(g, n, seed);
    }
    throw ParamError("unknown partition strategy");
}

}  // namespace kgtrade
