#pragma once

#include <vector>

#include "taxonet/types.hpp"

namespace taxonet {

// A conjunction of terms (one query disjunct).
struct Conjunction {
    TermSet terms;

    Conjunction() = default;
    explicit Conjunction(TermSet t) : terms(std::move(t)) {}

    bool operator==(const Conjunction& o) const { return terms == o.terms; }
    bool operator<(const Conjunction& o) const { return terms < o.terms; }
};

// A query in disjunctive normal form: an ordered list of conjunctions.
struct Query {
    std::vector<Conjunction> disjuncts;

    Query() = default;
    explicit Query(std::vector<Conjunction> d) : disjuncts(std::move(d)) { dedupe(); }

    static Query single(const Term& t) { return Query({Conjunction({t})}); }

    TermSet terms() const {
        TermSet all;
        for (const auto& d : disjuncts) all.insert(d.terms.begin(), d.terms.end());
        return all;
    }

    bool is_single_term() const {
        return disjuncts.size() == 1 && disjuncts.front().terms.size() == 1;
    }

    bool operator==(const Query& o) const { return disjuncts == o.disjuncts; }

private:
    void dedupe() {
        std::vector<Conjunction> out;
        for (auto& d : disjuncts) {
            bool seen = false;
            for (const auto& e : out)
                if (e == d) { seen = true; break; }
            if (!seen) out.push_back(std::move(d));
        }
        disjuncts = std::move(out);
    }
};

// One disjunct of a query with negation: positive and negated term sets.
struct NegDisjunct {
    TermSet positive;
    TermSet negative;

    // t and !t in the same disjunct; legal but always empty.
    bool contradictory() const { return !disjoint(positive, negative); }

    bool operator==(const NegDisjunct& o) const {
        return positive == o.positive && negative == o.negative;
    }
};

// DNF query over literals; negation allowed in queries only, never in taxonomies.
struct NegQuery {
    std::vector<NegDisjunct> disjuncts;
    bool contradiction_warning = false;

    TermSet terms() const {
        TermSet all;
        for (const auto& d : disjuncts) {
            all.insert(d.positive.begin(), d.positive.end());
            all.insert(d.negative.begin(), d.negative.end());
        }
        return all;
    }

    bool operator==(const NegQuery& o) const { return disjuncts == o.disjuncts; }
};

}  // namespace taxonet
