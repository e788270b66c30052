#pragma once

#include <map>
#include <utility>
#include <vector>

#include "taxonet/query.hpp"
#include "taxonet/types.hpp"

namespace taxonet {

// A subsumption hyperedge: conjunction of tail terms subsumed by the head term.
// Ordering is the canonical evaluation order: by head, then tail size, then
// tail contents. Every edge iteration in the library follows it.
struct Hyperedge {
    TermSet tail;
    Term head;

    Hyperedge() = default;
    Hyperedge(TermSet t, Term h) : tail(std::move(t)), head(std::move(h)) {}

    bool operator==(const Hyperedge& o) const { return head == o.head && tail == o.tail; }
    bool operator<(const Hyperedge& o) const {
        if (head != o.head) return head < o.head;
        if (tail.size() != o.tail.size()) return tail.size() < o.tail.size();
        return tail < o.tail;
    }
};

using EdgeSet = std::set<Hyperedge>;

// Simplified taxonomy: terminology plus hyperedges of the transitive
// reduction. The reflexive/transitive closure is never materialized.
struct Taxonomy {
    TermSet terminology;
    EdgeSet edges;
};

// Term interpretation; terms absent from the map denote the empty set.
struct Interpretation {
    std::map<Term, ObjSet> assignment;

    const ObjSet& operator()(const Term& t) const {
        static const ObjSet empty;
        auto it = assignment.find(t);
        return it == assignment.end() ? empty : it->second;
    }

    void add(const Term& t, const ObjectId& o) { assignment[t].insert(o); }

    ObjSet all_objects() const {
        ObjSet all;
        for (const auto& [t, objs] : assignment) all.insert(objs.begin(), objs.end());
        return all;
    }
};

struct Source {
    Taxonomy taxonomy;
    Interpretation interpretation;

    const TermSet& terminology() const { return taxonomy.terminology; }
    const EdgeSet& edges() const { return taxonomy.edges; }
    bool has_term(const Term& t) const { return taxonomy.terminology.count(t) > 0; }
};

// Expands a general DNF-to-conjunction relation into simplified hyperedges:
// each (C1 v ... v Cn, t1 ^ ... ^ tm) becomes all (Ci, tj). Edges whose head
// occurs in the tail are vacuous and dropped.
EdgeSet simplify(const std::vector<std::pair<Query, Conjunction>>& relation);

// R minus reflexive pairs minus pairs implied by one composition of the
// remainder (R1 \ R1^2). Retains 2-cycles by construction.
std::set<std::pair<Term, Term>> transitive_reduction(const std::set<std::pair<Term, Term>>& pairs);

// Source extended with a fresh query term subsuming each disjunct.
// Single-term queries need no embedding and pass through unchanged.
std::pair<Source, Term> embed_query(const Source& source, const Query& q);

// Terms whose interpretation contains the object.
TermSet index_of(const Source& source, const ObjectId& o);

}  // namespace taxonet
