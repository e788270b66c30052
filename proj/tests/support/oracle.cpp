#include <random>

#include "support/oracle.hpp"

namespace taxonet::oracle {

ObjSet query_extension(const Interpretation& interp, const Query& q) {
    ObjSet out;
    for (const auto& d : q.disjuncts) {
        bool first = true;
        ObjSet branch;
        for (const auto& t : d.terms) {
            if (first) {
                branch = interp(t);
                first = false;
            } else {
                branch = set_intersect(branch, interp(t));
            }
        }
        out.insert(branch.begin(), branch.end());
    }
    return out;
}

bool is_model(const GeneralSource& s, const Interpretation& J) {
    for (const auto& t : s.terminology) {
        const ObjSet& stored = s.stored(t);
        const ObjSet& cur = J(t);
        for (const auto& o : stored)
            if (!cur.count(o)) return false;
    }
    for (const auto& [lhs, rhs] : s.pairs) {
        ObjSet left = query_extension(J, lhs);
        ObjSet right = query_extension(J, Query({rhs}));
        for (const auto& o : left)
            if (!right.count(o)) return false;
    }
    return true;
}

std::vector<Interpretation> all_models(const GeneralSource& s) {
    std::vector<Term> terms(s.terminology.begin(), s.terminology.end());
    std::vector<ObjectId> objs(s.universe.begin(), s.universe.end());
    size_t subsets = size_t{1} << objs.size();

    std::vector<Interpretation> models;
    std::vector<size_t> choice(terms.size(), 0);
    while (true) {
        Interpretation J;
        for (size_t i = 0; i < terms.size(); ++i) {
            ObjSet set;
            for (size_t b = 0; b < objs.size(); ++b)
                if (choice[i] & (size_t{1} << b)) set.insert(objs[b]);
            if (!set.empty()) J.assignment[terms[i]] = std::move(set);
        }
        if (is_model(s, J)) models.push_back(std::move(J));
        // next assignment
        size_t i = 0;
        for (; i < terms.size(); ++i) {
            if (++choice[i] < subsets) break;
            choice[i] = 0;
        }
        if (i == terms.size()) break;
    }
    return models;
}

ObjSet brute_answer(const GeneralSource& s, const Query& q) {
    ObjSet answer = s.universe;
    for (const auto& J : all_models(s)) {
        answer = set_intersect(answer, query_extension(J, q));
        if (answer.empty()) break;
    }
    return answer;
}

GeneralSource lift(const Source& src, const ObjSet& universe) {
    GeneralSource g;
    g.terminology = src.terminology();
    g.stored = src.interpretation;
    g.universe = universe;
    for (const auto& e : src.edges())
        g.pairs.push_back({Query({Conjunction(e.tail)}), Conjunction({e.head})});
    return g;
}

GeneralSource random_general_source(uint64_t seed, int max_terms, int max_objects,
                                    int max_pairs) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    GeneralSource g;
    int n_terms = pick(1, max_terms);
    std::vector<Term> terms;
    for (int i = 0; i < n_terms; ++i) {
        terms.emplace_back("t" + std::to_string(i));
        g.terminology.insert(terms.back());
    }
    int n_objects = pick(1, max_objects);
    std::vector<ObjectId> objs;
    for (int i = 0; i < n_objects; ++i) {
        objs.emplace_back("o" + std::to_string(i));
        g.universe.insert(objs.back());
    }

    auto random_conj = [&]() {
        TermSet c;
        int want = pick(1, std::min(3, n_terms));
        for (int i = 0; i < want; ++i) c.insert(terms[(size_t)pick(0, n_terms - 1)]);
        return Conjunction(std::move(c));
    };

    int n_pairs = pick(0, max_pairs);
    for (int i = 0; i < n_pairs; ++i) {
        int disjuncts = pick(1, 2);
        std::vector<Conjunction> lhs;
        for (int d = 0; d < disjuncts; ++d) lhs.push_back(random_conj());
        g.pairs.push_back({Query(std::move(lhs)), random_conj()});
    }

    for (const auto& o : objs)
        if (pick(0, 3) > 0) g.stored.add(terms[(size_t)pick(0, n_terms - 1)], o);
    return g;
}

}  // namespace taxonet::oracle
