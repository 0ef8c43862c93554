#include "doctest.h"
#include "kgtrade/stats.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("stats");

namespace {

KnowledgeGraph fixture() {
    ParseResult pr = parse_ntriples(
        "<http://ex.org/a> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/C> .\n"
        "<http://ex.org/a> <http://ex.org/p> \"hi\"@en .\n"
        "<http://ex.org/a> <http://ex.org/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
        "<http://ex.org/b> <http://ex.org/q> <http://ex.org/a> .\n"
        "<http://ex.org/b> <http://ex.org/q> <http://ex.org/b> .\n");
    return pr.graph;
}

double stat(const GraphStatistics& st, const std::string& name) {
    for (size_t i = 0; i < kStatisticCount; ++i)
        if (name == GraphStatistics::names()[i]) return st[i];
    FAIL("unknown statistic ", name);
    return 0.0;
}

}  // namespace

TEST_CASE("catalog has 33 unique names") {
    std::set<std::string> seen;
    for (const char* n : GraphStatistics::names()) seen.insert(n);
    CHECK(seen.size() == kStatisticCount);
    CHECK(kStatisticCount == 33);
}

TEST_CASE("fixture values") {
    GraphStatistics st = compute_statistics(fixture());
    CHECK(stat(st, "statements") == 5);
    CHECK(stat(st, "distinct_subjects") == 2);
    CHECK(stat(st, "distinct_predicates") == 3);
    CHECK(stat(st, "distinct_objects") == 5);
    CHECK(stat(st, "distinct_resources") == 8);
    CHECK(stat(st, "distinct_literals") == 2);
    CHECK(stat(st, "distinct_iris") == 6);
    CHECK(stat(st, "literal_object_statements") == 2);
    CHECK(stat(st, "iri_object_statements") == 3);
    CHECK(stat(st, "out_degree_avg") == doctest::Approx(2.5));
    CHECK(stat(st, "out_degree_min") == 2);
    CHECK(stat(st, "out_degree_max") == 3);
    CHECK(stat(st, "in_degree_avg") == doctest::Approx(1.0));
    CHECK(stat(st, "predicate_frequency_avg") == doctest::Approx(5.0 / 3.0));
    CHECK(stat(st, "predicate_frequency_max") == 2);
    CHECK(stat(st, "distinct_subject_predicate_pairs") == 3);
    CHECK(stat(st, "distinct_predicate_object_pairs") == 5);
    CHECK(stat(st, "distinct_subject_object_pairs") == 5);
    CHECK(stat(st, "subject_and_object_nodes") == 2);
    CHECK(stat(st, "distinct_classes") == 1);
    CHECK(stat(st, "typed_subjects") == 1);
    CHECK(stat(st, "distinct_datatypes") == 1);
    CHECK(stat(st, "distinct_language_tags") == 1);
    CHECK(stat(st, "self_loop_statements") == 1);
    CHECK(stat(st, "graph_density") == doctest::Approx(5.0 / 64.0));
    CHECK(stat(st, "distinct_namespaces") == 2);
    CHECK(stat(st, "statements_per_subject_avg") == doctest::Approx(2.5));
    CHECK(stat(st, "statements_per_object_avg") == doctest::Approx(1.0));

    // Literal lengths are canonical-token lengths.
    double l1 = double(Term::make_literal("hi", "", "en").token().size());
    double l2 = double(
        Term::make_literal("5", "http://www.w3.org/2001/XMLSchema#integer").token().size());
    CHECK(stat(st, "literal_length_avg") == doctest::Approx((l1 + l2) / 2.0));
    CHECK(stat(st, "literal_length_max") == doctest::Approx(std::max(l1, l2)));
}

TEST_CASE("empty graph is all zeros") {
    GraphStatistics st = compute_statistics(KnowledgeGraph{});
    for (size_t i = 0; i < kStatisticCount; ++i) CHECK(st[i] == 0.0);
}

TEST_CASE("json round trip preserves order and values") {
    GraphStatistics st = compute_statistics(fixture());
    nlohmann::ordered_json j = st.to_json();
    size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i)
        CHECK(it.key() == GraphStatistics::names()[i]);
    CHECK(GraphStatistics::from_json(j) == st);
    j.erase("statements");
    CHECK_THROWS_AS(GraphStatistics::from_json(j), Error);
}

TEST_SUITE_END();
