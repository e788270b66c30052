#include <sstream>

#include "taxonet/parser.hpp"

namespace taxonet {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_structural(char c) { return c == '&' || c == '|' || c == '!' || c == ':'; }

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && is_space(text[pos])) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos == text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    // consume a single structural character
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    Term term() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && !is_space(text[pos]) && !is_structural(text[pos])) ++pos;
        if (pos == start) throw ParseError("expected a term", start);
        std::string name = text.substr(start, pos - start);
        if (has_reserved_prefix(name))
            throw ParseError("reserved term name '" + name + "'", start);
        return Term(std::move(name));
    }
};

// disjunct := literal ('&' literal)*
NegDisjunct parse_disjunct(Lexer& lx, bool allow_negation) {
    NegDisjunct d;
    while (true) {
        lx.skip_ws();
        bool negated = false;
        if (lx.peek() == '!') {
            if (!allow_negation) throw ParseError("negation is not allowed here", lx.pos);
            lx.expect('!');
            negated = true;
        }
        Term t = lx.term();
        (negated ? d.negative : d.positive).insert(std::move(t));
        if (lx.peek() != '&') break;
        lx.expect('&');
    }
    return d;
}

NegQuery parse_dnf(const std::string& text, bool allow_negation) {
    Lexer lx{text};
    if (lx.at_end()) throw ParseError("empty query", 0);
    NegQuery q;
    while (true) {
        NegDisjunct d = parse_disjunct(lx, allow_negation);
        if (d.contradictory()) q.contradiction_warning = true;
        q.disjuncts.push_back(std::move(d));
        if (lx.at_end()) break;
        lx.expect('|');
        if (lx.at_end()) throw ParseError("dangling '|'", lx.pos);
    }
    return q;
}

}  // namespace

Query parse_query(const std::string& text) {
    NegQuery nq = parse_dnf(text, false);
    std::vector<Conjunction> disjuncts;
    disjuncts.reserve(nq.disjuncts.size());
    for (auto& d : nq.disjuncts) disjuncts.push_back(Conjunction(std::move(d.positive)));
    return Query(std::move(disjuncts));
}

NegQuery parse_neg_query(const std::string& text) { return parse_dnf(text, true); }

std::string to_string(const Query& q) {
    std::ostringstream os;
    bool first_d = true;
    for (const auto& d : q.disjuncts) {
        if (!first_d) os << " | ";
        first_d = false;
        bool first_t = true;
        for (const auto& t : d.terms) {
            if (!first_t) os << " & ";
            first_t = false;
            os << t.name;
        }
    }
    return os.str();
}

std::string to_string(const NegQuery& q) {
    std::ostringstream os;
    bool first_d = true;
    for (const auto& d : q.disjuncts) {
        if (!first_d) os << " | ";
        first_d = false;
        bool first_t = true;
        for (const auto& t : d.positive) {
            if (!first_t) os << " & ";
            first_t = false;
            os << t.name;
        }
        for (const auto& t : d.negative) {
            if (!first_t) os << " & ";
            first_t = false;
            os << "!" << t.name;
        }
    }
    return os.str();
}

}  // namespace taxonet
