#pragma once

#include <optional>
#include <vector>

#include "taxonet/taxonomy.hpp"

namespace taxonet {

// One recursive evaluation call: the term, the visited set on entry, and how
// the call unfolded.
struct CallRecord {
    Term term;
    TermSet visited;
    size_t blocked_edges = 0;  // in-edges skipped because tail met the visited set
    size_t children = 0;       // recursive calls made
};

// Calls in recursion (pre-order) sequence. First entry is (t, {t}); each
// visited set extends its caller's by exactly one term.
struct CallTrace {
    std::vector<CallRecord> calls;

    // One line per call, `QE(term, {sorted visited})`.
    std::string dump() const;
};

// Map from term to the full answer set under the unique minimal model.
struct MinimalModel {
    std::map<Term, ObjSet> extension;

    const ObjSet& operator()(const Term& t) const {
        static const ObjSet empty;
        auto it = extension.find(t);
        return it == extension.end() ? empty : it->second;
    }
};

// Recursive term evaluation with a visited set:
//   R = I(x)  union over in-edges ({u1..ur}, x) with tail disjoint from A of
//       the intersection of answer_term(ui, A + {ui}).
// Edges iterate in canonical order; no memoization (results depend on A).
// Requires x in the terminology and x in A.
ObjSet answer_term(const Source& source, const Term& x, const TermSet& visited,
                   CallTrace* trace = nullptr, size_t* call_count = nullptr);

// Full-query answer: embed, evaluate the fresh term, discard the embedding.
ObjSet answer(const Source& source, const Query& q);

// Number of calls answer_term makes for the embedded root of q (root included).
size_t answer_call_count(const Source& source, const Query& q);

// Least fixpoint over the stored interpretation and the edge rules.
MinimalModel minimal_model(const Source& source);

// Closed-world answer for queries with negation: per disjunct the
// intersection of literal extensions, with e(t) the minimal-model value and
// e(!t) its complement in the universe. Universe defaults to the union of all
// interpretation ranges.
ObjSet extended_answer(const Source& source, const NegQuery& q,
                       const std::optional<ObjSet>& universe = std::nullopt);

}  // namespace taxonet
