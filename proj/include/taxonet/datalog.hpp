#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taxonet/taxonomy.hpp"

namespace taxonet {

// Ground atom over unary predicates; arguments are object constants.
struct Atom {
    std::string pred;
    ObjectId arg;

    bool operator==(const Atom& o) const { return pred == o.pred && arg == o.arg; }
    bool operator<(const Atom& o) const {
        if (pred != o.pred) return pred < o.pred;
        return arg < o.arg;
    }
};

struct BodyLiteral {
    std::string pred;
    bool negated = false;
};

// Single-variable rule head(x) :- body1(x), ..., bodyk(x).
struct Rule {
    std::string head;
    std::vector<BodyLiteral> body;
};

// The translation of a source and query:
//   term rules        Y_t :- Y_u1, ..., Y_ur      per hyperedge
//   extension rules   Y_t :- C_t                  per term
//   facts             C_t(o)                      per o in I(t)
//   query rules       q :- L_1, ..., L_k          per disjunct
// The query predicate never occurs in a body, so the program is stratified
// with q alone on the upper level.
struct DatalogProgram {
    std::vector<Rule> term_rules;
    std::vector<Rule> extension_rules;
    std::vector<Atom> facts;
    std::vector<Rule> query_rules;
    ObjSet universe;  // grounding domain for negated query rules

    static const std::string kQueryPred;
    static std::string term_pred(const Term& t) { return "Y_" + t.name; }
    static std::string ext_pred(const Term& t) { return "C_" + t.name; }
};

DatalogProgram to_datalog(const Source& source, const Query& q);
DatalogProgram to_datalog(const Source& source, const NegQuery& q,
                          const std::optional<ObjSet>& universe = std::nullopt);

// Bottom-up naive fixpoint, stratum by stratum. Throws UnstratifiableError if
// negation occurs outside query rules or the query predicate feeds a body.
std::set<Atom> naive_eval(const DatalogProgram& p);

// Objects o with q(o) in the evaluated program.
ObjSet query_answers(const std::set<Atom>& atoms);

}  // namespace taxonet
