#include "doctest.h"
#include "kgtrade/kg.hpp"

using namespace kgtrade;

TEST_SUITE_BEGIN("kg");

TEST_CASE("term tokens") {
    CHECK(Term::make_iri("http://ex.org/a").token() == "<http://ex.org/a>");
    CHECK(Term::make_literal("hi").token() == "\"hi\"");
    CHECK(Term::make_literal("hi", "", "en").token() == "\"hi\"@en");
    CHECK(Term::make_literal("5", "http://www.w3.org/2001/XMLSchema#integer").token() ==
          "\"5\"^^<http://www.w3.org/2001/XMLSchema#integer>");
    CHECK(Term::make_literal("a\"b\\c\nd\te").token() == "\"a\\\"b\\\\c\\nd\\te\"");
}

TEST_CASE("canonical statement bytes") {
    Statement s{Term::make_iri("http://ex.org/s"), Term::make_iri("http://ex.org/p"),
                Term::make_literal("v")};
    CHECK(canonical_string(s) == "<http://ex.org/s> <http://ex.org/p> \"v\"");
    CHECK(canonical_bytes(s) == to_bytes(canonical_string(s)));
}

TEST_CASE("parse and serialize round trip") {
    std::string doc =
        "<http://ex.org/s> <http://ex.org/p> <http://ex.org/o> .\n"
        "# a comment\n"
        "<http://ex.org/s> <http://ex.org/p> \"lit\"@en .\n"
        "<http://ex.org/s> <http://ex.org/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
        "\n"
        "<http://ex.org/s> <http://ex.org/p> <http://ex.org/o> .\n";
    ParseResult pr = parse_ntriples(doc);
    CHECK(pr.graph.size() == 3);  // duplicate collapses
    CHECK(pr.blank_node_lines == 0);

    std::string out = serialize_ntriples(pr.graph);
    CHECK(parse_ntriples(out).graph == pr.graph);
    // Sorted, one per line, terminated with " ."
    CHECK(out.find(" .\n") != std::string::npos);
}

TEST_CASE("blank node lines dropped and counted") {
    std::string doc =
        "_:b1 <http://ex.org/p> <http://ex.org/o> .\n"
        "<http://ex.org/s> <http://ex.org/p> _:b2 .\n"
        "<http://ex.org/s> <http://ex.org/p> <http://ex.org/o> .\n";
    ParseResult pr = parse_ntriples(doc);
    CHECK(pr.graph.size() == 1);
    CHECK(pr.blank_node_lines == 2);
}

TEST_CASE("parse errors carry the line number") {
    try {
        parse_ntriples("<http://ex.org/s> <http://ex.org/p> <http://ex.org/o> .\nnot a triple\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("unicode escapes") {
    ParseResult pr = parse_ntriples(
        "<http://ex.org/s> <http://ex.org/p> \"\\u0041\\u00e9\" .\n");
    CHECK(pr.graph.statements().begin()->object.lexical == "A\xc3\xa9");
}

TEST_CASE("empty input") {
    CHECK(parse_ntriples("").graph.empty());
    CHECK(serialize_ntriples(KnowledgeGraph{}).empty());
}

TEST_CASE("set operations") {
    auto g = [](std::initializer_list<int> ids) {
        KnowledgeGraph out;
        for (int i : ids)
            out.insert(Statement{Term::make_iri("http://ex.org/s" + std::to_string(i)),
                                 Term::make_iri("http://ex.org/p"),
                                 Term::make_iri("http://ex.org/o")});
        return out;
    };
    KnowledgeGraph a = g({1, 2, 3});
    KnowledgeGraph b = g({2, 3, 4});
    CHECK(graph_intersection(a, b) == g({2, 3}));
    CHECK(graph_union(a, b) == g({1, 2, 3, 4}));
    CHECK(graph_difference(a, b) == g({1}));
    CHECK(graph_difference(b, a) == g({4}));
}

TEST_SUITE_END();
