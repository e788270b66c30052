#include "taxonet/datalog.hpp"

namespace taxonet {

const std::string DatalogProgram::kQueryPred = "q";

namespace {

DatalogProgram translate_source(const Source& source) {
    DatalogProgram p;
    for (const auto& edge : source.edges()) {
        Rule r;
        r.head = DatalogProgram::term_pred(edge.head);
        for (const auto& u : edge.tail) r.body.push_back({DatalogProgram::term_pred(u), false});
        p.term_rules.push_back(std::move(r));
    }
    for (const auto& t : source.terminology())
        p.extension_rules.push_back(
            {DatalogProgram::term_pred(t), {{DatalogProgram::ext_pred(t), false}}});
    for (const auto& [t, objs] : source.interpretation.assignment)
        for (const auto& o : objs) p.facts.push_back({DatalogProgram::ext_pred(t), o});
    return p;
}

}  // namespace

DatalogProgram to_datalog(const Source& source, const Query& q) {
    DatalogProgram p = translate_source(source);
    for (const auto& d : q.disjuncts) {
        Rule r;
        r.head = DatalogProgram::kQueryPred;
        for (const auto& t : d.terms) r.body.push_back({DatalogProgram::term_pred(t), false});
        p.query_rules.push_back(std::move(r));
    }
    p.universe = source.interpretation.all_objects();
    return p;
}

DatalogProgram to_datalog(const Source& source, const NegQuery& q,
                          const std::optional<ObjSet>& universe) {
    DatalogProgram p = translate_source(source);
    for (const auto& d : q.disjuncts) {
        Rule r;
        r.head = DatalogProgram::kQueryPred;
        for (const auto& t : d.positive) r.body.push_back({DatalogProgram::term_pred(t), false});
        for (const auto& t : d.negative) r.body.push_back({DatalogProgram::term_pred(t), true});
        p.query_rules.push_back(std::move(r));
    }
    ObjSet stored = source.interpretation.all_objects();
    p.universe = universe ? *universe : stored;
    for (const auto& o : stored)
        if (!p.universe.count(o))
            throw IllegalStateError("universe must contain every interpreted object, missing " +
                                    o.id);
    return p;
}

std::set<Atom> naive_eval(const DatalogProgram& p) {
    // The only admissible stratification: negation confined to query rules,
    // query predicate absent from every body.
    for (const auto* rules : {&p.term_rules, &p.extension_rules}) {
        for (const auto& r : *rules) {
            for (const auto& lit : r.body) {
                if (lit.negated)
                    throw UnstratifiableError("negation outside the query stratum");
                if (lit.pred == DatalogProgram::kQueryPred)
                    throw UnstratifiableError("query predicate used in a rule body");
            }
        }
    }
    for (const auto& r : p.query_rules)
        for (const auto& lit : r.body)
            if (lit.pred == DatalogProgram::kQueryPred)
                throw UnstratifiableError("query predicate used in a rule body");

    std::set<Atom> m(p.facts.begin(), p.facts.end());
    ObjSet domain = p.universe;
    for (const auto& f : p.facts) domain.insert(f.arg);

    // stratum 0: positive fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto* rules : {&p.term_rules, &p.extension_rules}) {
            for (const auto& r : *rules) {
                for (const auto& o : domain) {
                    bool satisfied = true;
                    for (const auto& lit : r.body)
                        if (!m.count({lit.pred, o})) {
                            satisfied = false;
                            break;
                        }
                    if (satisfied && m.insert({r.head, o}).second) changed = true;
                }
            }
        }
    }
    // stratum 1: query rules, one pass with negation as failure
    for (const auto& r : p.query_rules) {
        for (const auto& o : domain) {
            bool satisfied = true;
            for (const auto& lit : r.body) {
                bool present = m.count({lit.pred, o}) > 0;
                if (present == lit.negated) {
                    satisfied = false;
                    break;
                }
            }
            if (satisfied) m.insert({r.head, o});
        }
    }
    return m;
}

ObjSet query_answers(const std::set<Atom>& atoms) {
    ObjSet out;
    for (const auto& a : atoms)
        if (a.pred == DatalogProgram::kQueryPred) out.insert(a.arg);
    return out;
}

}  // namespace taxonet
