#pragma once

#include <set>
#include <string>
#include <tuple>

#include "kgtrade/bytes.hpp"

namespace kgtrade {

/// An RDF term: an IRI or a literal. Blank nodes are not representable.
struct Term {
    enum class Kind { iri, literal };

    Kind kind = Kind::iri;
    std::string lexical;   // IRI without angle brackets, or the literal value
    std::string datatype;  // literal datatype IRI, empty when untyped
    std::string lang;      // literal language tag, empty when absent

    static Term make_iri(std::string iri);
    static Term make_literal(std::string value, std::string datatype = "",
                             std::string lang = "");

    bool is_iri() const { return kind == Kind::iri; }

    /// Canonical N-Triples token: <iri> or "value"@lang / "value"^^<dt>.
    std::string token() const;

    auto operator<=>(const Term&) const = default;
};

struct Statement {
    Term subject;    // iri
    Term predicate;  // iri
    Term object;

    auto operator<=>(const Statement&) const = default;
};

/// Deterministic byte encoding of a statement: the three canonical term
/// tokens joined by single spaces, no trailing dot. Injective.
Bytes canonical_bytes(const Statement& s);
std::string canonical_string(const Statement& s);

class KnowledgeGraph {
  public:
    KnowledgeGraph() = default;
    explicit KnowledgeGraph(std::set<Statement> statements)
        : statements_(std::move(statements)) {}

    size_t size() const { return statements_.size(); }
    bool empty() const { return statements_.empty(); }
    bool contains(const Statement& s) const { return statements_.count(s) > 0; }
    const std::set<Statement>& statements() const { return statements_; }

    void insert(Statement s) { statements_.insert(std::move(s)); }

    bool operator==(const KnowledgeGraph&) const = default;

  private:
    std::set<Statement> statements_;
};

KnowledgeGraph graph_difference(const KnowledgeGraph& a, const KnowledgeGraph& b);
KnowledgeGraph graph_union(const KnowledgeGraph& a, const KnowledgeGraph& b);
KnowledgeGraph graph_intersection(const KnowledgeGraph& a, const KnowledgeGraph& b);

struct ParseResult {
    KnowledgeGraph graph;
    size_t blank_node_lines = 0;  // dropped, tallied as a warning
};

/// Line-oriented N-Triples parser. Lines containing blank nodes are dropped
/// and counted; duplicates collapse. Throws ParseError with the line number
/// on malformed input. Empty input yields an empty graph.
ParseResult parse_ntriples(const std::string& text);

/// Sorted canonical N-Triples document, one statement per line with " .".
std::string serialize_ntriples(const KnowledgeGraph& g);

}  // namespace kgtrade
