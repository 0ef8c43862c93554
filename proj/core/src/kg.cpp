#include "kgtrade/kg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kgtrade {

Term Term::make_iri(std::string iri) {
    Term t;
    t.kind = Kind::iri;
    t.lexical = std::move(iri);
    return t;
}

Term Term::make_literal(std::string value, std::string datatype, std::string lang) {
    Term t;
    t.kind = Kind::literal;
    t.lexical = std::move(value);
    t.datatype = std::move(datatype);
    t.lang = std::move(lang);
    return t;
}

namespace {

void escape_literal(const std::string& in, std::string& out) {
    for (char c : in) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(char(cp));
    } else if (cp < 0x800) {
        out.push_back(char(0xC0 | (cp >> 6)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(char(0xE0 | (cp >> 12)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(char(0xF0 | (cp >> 18)));
        out.push_back(char(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    }
}

struct LineParser {
    const std::string& s;
    size_t pos = 0;
    size_t lineno;

    LineParser(const std::string& line, size_t lineno_) : s(line), lineno(lineno_) {}

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(lineno, msg); }

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() { return pos < s.size() ? s[pos] : '\0'; }

    bool blank_node_next() { return peek() == '_'; }

    std::string parse_iri() {
        if (peek() != '<') fail("expected IRI");
        ++pos;
        std::string iri;
        while (pos < s.size() && s[pos] != '>') {
            char c = s[pos];
            if (c == ' ' || c == '\t') fail("whitespace inside IRI");
            if (c == '\\') {
                iri += parse_escape();
            } else {
                iri.push_back(c);
                ++pos;
            }
        }
        if (pos >= s.size()) fail("unterminated IRI");
        ++pos;  // '>'
        if (iri.empty()) fail("empty IRI");
        return iri;
    }

    std::string parse_escape() {
        // pos is at '\\'
        if (pos + 1 >= s.size()) fail("dangling escape");
        char c = s[pos + 1];
        std::string out;
        switch (c) {
            case 't': out = "\t"; pos += 2; break;
            case 'b': out = "\b"; pos += 2; break;
            case 'n': out = "\n"; pos += 2; break;
            case 'r': out = "\r"; pos += 2; break;
            case 'f': out = "\f"; pos += 2; break;
            case '"': out = "\""; pos += 2; break;
            case '\'': out = "'"; pos += 2; break;
            case '\\': out = "\\"; pos += 2; break;
            case 'u': out = parse_unicode(4); break;
            case 'U': out = parse_unicode(8); break;
            default: fail("unknown escape");
        }
        return out;
    }

    std::string parse_unicode(int digits) {
        if (pos + 2 + digits > s.size()) fail("truncated unicode escape");
        uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            char c = s[pos + 2 + i];
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else { fail("bad unicode escape"); }
            cp = cp << 4 | uint32_t(v);
        }
        pos += 2 + digits;
        std::string out;
        append_utf8(out, cp);
        return out;
    }

    Term parse_literal() {
        // pos at opening '"'
        ++pos;
        std::string value;
        while (pos < s.size() && s[pos] != '"') {
            if (s[pos] == '\\') {
                value += parse_escape();
            } else {
                value.push_back(s[pos]);
                ++pos;
            }
        }
        if (pos >= s.size()) fail("unterminated literal");
        ++pos;  // closing quote
        std::string datatype, lang;
        if (peek() == '@') {
            ++pos;
            while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '-'))
                lang.push_back(s[pos++]);
            if (lang.empty()) fail("empty language tag");
        } else if (peek() == '^') {
            if (pos + 1 >= s.size() || s[pos + 1] != '^') fail("expected ^^");
            pos += 2;
            datatype = parse_iri();
        }
        return Term::make_literal(std::move(value), std::move(datatype), std::move(lang));
    }

    Term parse_object() {
        skip_ws();
        if (peek() == '<') return Term::make_iri(parse_iri());
        if (peek() == '"') return parse_literal();
        fail("expected IRI or literal object");
    }
};

}  // namespace

std::string Term::token() const {
    std::string out;
    if (kind == Kind::iri) {
        out.push_back('<');
        out += lexical;
        out.push_back('>');
        return out;
    }
    out.push_back('"');
    escape_literal(lexical, out);
    out.push_back('"');
    if (!lang.empty()) {
        out.push_back('@');
        out += lang;
    } else if (!datatype.empty()) {
        out += "^^<";
        out += datatype;
        out.push_back('>');
    }
    return out;
}

std::string canonical_string(const Statement& s) {
    return s.subject.token() + " " + s.predicate.token() + " " + s.object.token();
}

Bytes canonical_bytes(const Statement& s) {
    return to_bytes(canonical_string(s));
}

KnowledgeGraph graph_difference(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    std::set<Statement> out;
    std::set_difference(a.statements().begin(), a.statements().end(),
                        b.statements().begin(), b.statements().end(),
                        std::inserter(out, out.begin()));
    return KnowledgeGraph(std::move(out));
}

KnowledgeGraph graph_union(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    std::set<Statement> out = a.statements();
    out.insert(b.statements().begin(), b.statements().end());
    return KnowledgeGraph(std::move(out));
}

KnowledgeGraph graph_intersection(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    std::set<Statement> out;
    std::set_intersection(a.statements().begin(), a.statements().end(),
                          b.statements().begin(), b.statements().end(),
                          std::inserter(out, out.begin()));
    return KnowledgeGraph(std::move(out));
}

ParseResult parse_ntriples(const std::string& text) {
    ParseResult result;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        LineParser p(line, lineno);
        if (p.at_end()) continue;
        if (p.peek() == '#') continue;

        // A blank node in any position drops the whole line.
        if (p.blank_node_next()) {
            ++result.blank_node_lines;
            continue;
        }
        Statement st;
        st.subject = Term::make_iri(p.parse_iri());
        p.skip_ws();
        st.predicate = Term::make_iri(p.parse_iri());
        p.skip_ws();
        if (p.blank_node_next()) {
            ++result.blank_node_lines;
            continue;
        }
        st.object = p.parse_object();
        p.skip_ws();
        if (p.peek() != '.') p.fail("expected terminating '.'");
        ++p.pos;
        if (!p.at_end() && p.peek() != '#') p.fail("trailing content after '.'");
        result.graph.insert(std::move(st));
    }
    return result;
}

std::string serialize_ntriples(const KnowledgeGraph& g) {
    std::string out;
    for (const Statement& s : g.statements()) {
        out += canonical_string(s);
        out += " .\n";
    }
    return out;
}

}  // namespace kgtrade
