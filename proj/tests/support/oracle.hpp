#pragma once

#include <cstdint>
#include <vector>

#include "taxonet/query.hpp"
#include "taxonet/taxonomy.hpp"

// Brute-force reference machinery, independent of the evaluation code it
// checks: answers are computed straight from the model-theoretic definitions
// by enumerating every interpretation.
namespace taxonet::oracle {

// General (unsimplified) relationship: DNF left side, conjunction right side.
using GeneralPair = std::pair<Query, Conjunction>;

struct GeneralSource {
    TermSet terminology;
    std::vector<GeneralPair> pairs;
    Interpretation stored;
    ObjSet universe;
};

// Extension of a DNF query under an interpretation.
ObjSet query_extension(const Interpretation& interp, const Query& q);

// J is a model: every relationship's left extension is contained in the
// right's, and the stored interpretation is dominated by J.
bool is_model(const GeneralSource& s, const Interpretation& J);

// All interpretations of the terminology over the universe (|P(U)|^|T| of
// them) that are models of the source.
std::vector<Interpretation> all_models(const GeneralSource& s);

// ans(q, S) per the definition: objects in q's extension under every model.
ObjSet brute_answer(const GeneralSource& s, const Query& q);

// Same machinery over an already-simplified source.
GeneralSource lift(const Source& src, const ObjSet& universe);

// Seeded random general source within the given bounds.
GeneralSource random_general_source(uint64_t seed, int max_terms, int max_objects,
                                    int max_pairs);

}  // namespace taxonet::oracle
