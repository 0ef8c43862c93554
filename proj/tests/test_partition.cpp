#include <map>

#include "doctest.h"
#include "kgtrade/graphgen.hpp"
#include "kgtrade/partition.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("partition");

namespace {

Statement edge(const std::string& a, const std::string& b) {
    return Statement{Term::make_iri("http://ex.org/" + a),
                     Term::make_iri("http://ex.org/e"),
                     Term::make_iri("http://ex.org/" + b)};
}

KnowledgeGraph path_graph(int edges) {
    KnowledgeGraph g;
    for (int i = 0; i < edges; ++i)
        g.insert(edge("n" + std::to_string(i), "n" + std::to_string(i + 1)));
    return g;
}

void check_partition_contract(const Partition& p, const KnowledgeGraph& g, size_t n) {
    REQUIRE(p.parts.size() == n);
    size_t total = 0;
    std::set<Statement> seen;
    for (const auto& part : p.parts) {
        total += part.size();
        for (const Statement& s : part) {
            CHECK(g.contains(s));
            CHECK(!seen.count(s));  // disjoint
            seen.insert(s);
        }
    }
    CHECK(total == g.size());
}

/// Number of connected components of the part in the undirected node view.
size_t component_count(const std::set<Statement>& part) {
    std::map<Term, Term> parent;
    auto find = [&](Term x) {
        while (!(parent.at(x) == x)) x = parent.at(x);
        return x;
    };
    for (const Statement& s : part) {
        parent.emplace(s.subject, s.subject);
        parent.emplace(s.object, s.object);
    }
    size_t merges = 0;
    for (const Statement& s : part) {
        Term a = find(s.subject), b = find(s.object);
        if (!(a == b)) {
            parent.insert_or_assign(a, b);
            ++merges;
        }
    }
    return parent.size() - merges;
}

}  // namespace

TEST_CASE("random partition sizes differ by at most one") {
    KnowledgeGraph g = generate_graph({.statements = 103, .seed = 41});
    Partition p = partition_random(g, 4, 7);
    check_partition_contract(p, g, 4);
    size_t mn = SIZE_MAX, mx = 0;
    for (const auto& part : p.parts) {
        mn = std::min(mn, part.size());
        mx = std::max(mx, part.size());
    }
    CHECK(mx - mn <= 1);
}

TEST_CASE("random partition is deterministic in the seed") {
    KnowledgeGraph g = generate_graph({.statements = 40, .seed = 42});
    CHECK(partition_random(g, 3, 9).parts == partition_random(g, 3, 9).parts);
    CHECK(partition_random(g, 3, 9).parts != partition_random(g, 3, 10).parts);
}

TEST_CASE("parameter validation") {
    KnowledgeGraph g = generate_graph({.statements = 10, .seed = 43});
    CHECK_THROWS_AS(partition_random(g, 0, 1), ParamError);
    CHECK_THROWS_AS(partition_random(g, 11, 1), ParamError);
    CHECK_THROWS_AS(partition_balanced_clustered(g, 0, 1), ParamError);
    CHECK_THROWS_AS(partition_balanced_clustered(g, 11, 1), ParamError);
}

TEST_CASE("balanced clustered on a path yields connected balanced parts") {
    KnowledgeGraph g = path_graph(9);
    Partition p = partition_balanced_clustered(g, 3, 5);
    check_partition_contract(p, g, 3);
    for (const auto& part : p.parts) {
        CHECK(part.size() == 3);
        CHECK(component_count(part) <= 1);
    }
}

TEST_CASE("balanced clustered keeps sizes near the cap") {
    KnowledgeGraph g = generate_graph({.statements = 200, .seed = 44});
    Partition p = partition_balanced_clustered(g, 5, 6);
    check_partition_contract(p, g, 5);
    size_t cap = (g.size() + 4) / 5;
    for (const auto& part : p.parts) {
        CHECK(part.size() >= 1);
        CHECK(part.size() <= cap + cap / 2 + 1);  // leftovers may stretch a part
    }
}

TEST_CASE("balanced clustered is deterministic") {
    KnowledgeGraph g = generate_graph({.statements = 80, .seed = 45});
    CHECK(partition_balanced_clustered(g, 4, 3).parts ==
          partition_balanced_clustered(g, 4, 3).parts);
}

TEST_CASE("dispatcher") {
    KnowledgeGraph g = path_graph(6);
    CHECK(make_partition(g, 2, 1, PartitionStrategy::random).strategy ==
          PartitionStrategy::random);
    CHECK(make_partition(g, 2, 1, PartitionStrategy::balanced_clustered).strategy ==
          PartitionStrategy::balanced_clustered);
}

TEST_SUITE_END();
