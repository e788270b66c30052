#include <sstream>

#include "taxonet/eval.hpp"

namespace taxonet {

namespace {

// In-edges per head, in canonical order.
std::map<Term, std::vector<const Hyperedge*>> index_edges(const EdgeSet& edges) {
    std::map<Term, std::vector<const Hyperedge*>> idx;
    for (const auto& e : edges) idx[e.head].push_back(&e);
    return idx;
}

struct Evaluator {
    const Source& source;
    const std::map<Term, std::vector<const Hyperedge*>> in_edges;
    CallTrace* trace;
    size_t* calls;

    ObjSet run(const Term& x, const TermSet& visited) {
        if (calls) ++*calls;
        size_t slot = trace ? trace->calls.size() : 0;
        if (trace) trace->calls.push_back({x, visited, 0, 0});

        ObjSet result = source.interpretation(x);
        auto it = in_edges.find(x);
        if (it == in_edges.end()) return result;
        for (const Hyperedge* edge : it->second) {
            if (!disjoint(edge->tail, visited)) {
                if (trace) ++trace->calls[slot].blocked_edges;
                continue;
            }
            bool first = true;
            ObjSet branch;
            for (const auto& u : edge->tail) {
                if (trace) ++trace->calls[slot].children;
                TermSet extended = visited;
                extended.insert(u);
                ObjSet sub = run(u, extended);
                if (first) {
                    branch = std::move(sub);
                    first = false;
                } else {
                    branch = set_intersect(branch, sub);
                }
            }
            result.insert(branch.begin(), branch.end());
        }
        return result;
    }
};

}  // namespace

std::string CallTrace::dump() const {
    std::ostringstream os;
    for (const auto& c : calls) {
        os << "QE(" << c.term.name << ", {";
        bool first = true;
        for (const auto& v : c.visited) {
            if (!first) os << ",";
            first = false;
            os << v.name;
        }
        os << "})\n";
    }
    return os.str();
}

ObjSet answer_term(const Source& source, const Term& x, const TermSet& visited,
                   CallTrace* trace, size_t* call_count) {
    if (!source.has_term(x)) throw UnknownTermError("unknown term: " + x.name);
    if (!visited.count(x)) throw IllegalStateError("visited set must contain the query term");
    Evaluator ev{source, index_edges(source.edges()), trace, call_count};
    return ev.run(x, visited);
}

ObjSet answer(const Source& source, const Query& q) {
    auto [embedded, root] = embed_query(source, q);
    return answer_term(embedded, root, {root});
}

size_t answer_call_count(const Source& source, const Query& q) {
    // mirrors the network evaluation, which embeds a fresh root even for
    // single-term queries
    uint64_t n = 0;
    Term fresh;
    do {
        fresh = Term("__q" + std::to_string(n++));
    } while (source.has_term(fresh));
    Source extended = source;
    extended.taxonomy.terminology.insert(fresh);
    for (const auto& d : q.disjuncts) extended.taxonomy.edges.insert(Hyperedge(d.terms, fresh));
    size_t calls = 0;
    answer_term(extended, fresh, {fresh}, nullptr, &calls);
    return calls;
}

MinimalModel minimal_model(const Source& source) {
    MinimalModel mm;
    for (const auto& [t, objs] : source.interpretation.assignment)
        mm.extension[t] = objs;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& edge : source.edges()) {
            bool first = true;
            ObjSet tail_objs;
            for (const auto& u : edge.tail) {
                const ObjSet& cur = mm(u);
                if (first) {
                    tail_objs = cur;
                    first = false;
                } else {
                    tail_objs = set_intersect(tail_objs, cur);
                }
                if (tail_objs.empty()) break;
            }
            if (tail_objs.empty()) continue;
            ObjSet& head = mm.extension[edge.head];
            for (const auto& o : tail_objs)
                if (head.insert(o).second) changed = true;
        }
    }
    return mm;
}

ObjSet extended_answer(const Source& source, const NegQuery& q,
                       const std::optional<ObjSet>& universe) {
    for (const auto& t : q.terms())
        if (!source.has_term(t)) throw UnknownTermError("unknown term in query: " + t.name);

    ObjSet stored = source.interpretation.all_objects();
    ObjSet domain = universe ? *universe : stored;
    for (const auto& o : stored)
        if (!domain.count(o))
            throw IllegalStateError("universe must contain every interpreted object, missing " +
                                    o.id);
    MinimalModel mm = minimal_model(source);

    ObjSet result;
    for (const auto& d : q.disjuncts) {
        bool first = true;
        ObjSet ext;
        auto combine = [&](const ObjSet& lit) {
            if (first) {
                ext = lit;
                first = false;
            } else {
                ext = set_intersect(ext, lit);
            }
        };
        for (const auto& t : d.positive) combine(mm(t));
        for (const auto& t : d.negative) combine(set_minus(domain, mm(t)));
        result.insert(ext.begin(), ext.end());
    }
    return result;
}

}  // namespace taxonet
