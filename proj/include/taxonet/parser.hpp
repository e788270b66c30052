#pragma once

#include <string>

#include "taxonet/query.hpp"

namespace taxonet {

// DNF query syntax: `term (& term)* (| term (& term)*)*`. '&' binds tighter
// than '|'; no parentheses. Tokens are any non-whitespace characters except
// the structural '&', '|', '!', ':'. Throws ParseError with a byte offset.
Query parse_query(const std::string& text);

// As parse_query, but a literal may carry the negation prefix '!'. A disjunct
// containing both t and !t parses with the contradiction warning set.
NegQuery parse_neg_query(const std::string& text);

// Canonical textual form; parse(to_string(q)) == q.
std::string to_string(const Query& q);
std::string to_string(const NegQuery& q);

}  // namespace taxonet
