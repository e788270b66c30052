#include <algorithm>

#include "taxonet/network.hpp"
#include "taxonet/taxonomy.hpp"

namespace taxonet {

EdgeSet simplify(const std::vector<std::pair<Query, Conjunction>>& relation) {
    EdgeSet out;
    for (const auto& [lhs, rhs] : relation) {
        if (rhs.terms.empty()) throw MalformedTaxonomyError("right side is not a conjunction");
        for (const auto& disjunct : lhs.disjuncts) {
            if (disjunct.terms.empty())
                throw MalformedTaxonomyError("empty disjunct on left side");
            for (const auto& head : rhs.terms) {
                if (disjunct.terms.count(head)) continue;  // vacuous
                out.insert(Hyperedge(disjunct.terms, head));
            }
        }
    }
    return out;
}

std::set<std::pair<Term, Term>> transitive_reduction(
    const std::set<std::pair<Term, Term>>& pairs) {
    std::set<std::pair<Term, Term>> r1;
    for (const auto& p : pairs)
        if (p.first != p.second) r1.insert(p);
    // pairs implied by one composition of the remainder
    std::set<std::pair<Term, Term>> composed;
    for (const auto& [a, b] : r1)
        for (const auto& [c, d] : r1)
            if (b == c) composed.insert({a, d});
    std::set<std::pair<Term, Term>> out;
    for (const auto& p : r1)
        if (!composed.count(p)) out.insert(p);
    return out;
}

std::pair<Source, Term> embed_query(const Source& source, const Query& q) {
    for (const auto& t : q.terms())
        if (!source.has_term(t)) throw UnknownTermError("unknown term in query: " + t.name);

    if (q.is_single_term()) return {source, *q.disjuncts.front().terms.begin()};

    // smallest free index keeps embedding deterministic and collision-free
    uint64_t n = 0;
    Term fresh;
    do {
        fresh = Term("__q" + std::to_string(n++));
    } while (source.has_term(fresh));

    Source extended = source;
    extended.taxonomy.terminology.insert(fresh);
    for (const auto& d : q.disjuncts) extended.taxonomy.edges.insert(Hyperedge(d.terms, fresh));
    return {std::move(extended), fresh};
}

TermSet index_of(const Source& source, const ObjectId& o) {
    TermSet out;
    for (const auto& [t, objs] : source.interpretation.assignment)
        if (objs.count(o)) out.insert(t);
    return out;
}

Source flatten(const Network& network) {
    Source out;
    for (const auto& [id, peer] : network.peers) {
        const auto& src = peer.source;
        out.taxonomy.terminology.insert(src.terminology().begin(), src.terminology().end());
        out.taxonomy.edges.insert(src.edges().begin(), src.edges().end());
        out.taxonomy.edges.insert(peer.articulations.begin(), peer.articulations.end());
        for (const auto& [t, objs] : src.interpretation.assignment)
            if (!objs.empty()) out.interpretation.assignment[t].insert(objs.begin(), objs.end());
    }
    return out;
}

}  // namespace taxonet
