#include <sstream>

#include "taxonet/validate.hpp"

namespace taxonet {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NegationInTaxonomy: return "NegationInTaxonomy";
        case ViolationKind::DisjunctiveHead: return "DisjunctiveHead";
        case ViolationKind::ReservedPrefix: return "ReservedPrefix";
        case ViolationKind::UnknownTerm: return "UnknownTerm";
        case ViolationKind::HeadInTail: return "HeadInTail";
        case ViolationKind::DuplicatePeerId: return "DuplicatePeerId";
        case ViolationKind::DuplicateTerm: return "DuplicateTerm";
        case ViolationKind::DanglingForeignTerm: return "DanglingForeignTerm";
        case ViolationKind::ForeignTermInEdge: return "ForeignTermInEdge";
        case ViolationKind::LocalTermInArticulationTail: return "LocalTermInArticulationTail";
        case ViolationKind::BadToken: return "BadToken";
        case ViolationKind::EmptyNetwork: return "EmptyNetwork";
    }
    return "?";
}

std::string Violation::format() const {
    std::ostringstream os;
    os << (warning ? "warning" : "error") << " " << to_string(kind) << " at " << where;
    if (!detail.empty()) os << ": " << detail;
    return os.str();
}

namespace {

bool has_whitespace(const std::string& s) {
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return true;
    return false;
}

// A raw taxonomy token: optionally '!'-prefixed, optionally one "peer:"
// qualifier, possibly a '|'-joined disjunction (heads only, rejected).
struct TokenShape {
    bool negated = false;
    bool disjunctive = false;
    bool reserved = false;
    bool bad = false;
    std::string stripped;  // token without the '!' prefix
};

TokenShape classify(const std::string& raw) {
    TokenShape s;
    std::string t = raw;
    if (!t.empty() && t[0] == '!') {
        s.negated = true;
        t = t.substr(1);
    }
    s.stripped = t;
    if (t.empty() || has_whitespace(t)) {
        s.bad = true;
        return s;
    }
    if (t.find('|') != std::string::npos) s.disjunctive = true;
    if (t.find('&') != std::string::npos || t.find('!') != std::string::npos) s.bad = true;
    auto colon = t.find(':');
    std::string name = colon == std::string::npos ? t : t.substr(colon + 1);
    if (colon != std::string::npos &&
        (colon == 0 || name.empty() || name.find(':') != std::string::npos))
        s.bad = true;
    if (has_reserved_prefix(name)) s.reserved = true;
    return s;
}

struct Checker {
    std::vector<Violation>& out;

    void error(ViolationKind kind, std::string where, std::string detail) {
        out.push_back({kind, false, std::move(where), std::move(detail)});
    }
    void warn(ViolationKind kind, std::string where, std::string detail) {
        out.push_back({kind, true, std::move(where), std::move(detail)});
    }

    // Shape checks shared by heads and tails. Returns false when the token is
    // unusable for the later reference checks.
    bool check_token(const std::string& raw, const std::string& where, bool is_head) {
        TokenShape s = classify(raw);
        bool ok = true;
        if (s.bad) {
            error(ViolationKind::BadToken, where, "'" + raw + "'");
            return false;
        }
        if (s.negated) {
            error(ViolationKind::NegationInTaxonomy, where, "'" + raw + "'");
            ok = false;
        }
        if (s.disjunctive) {
            if (is_head)
                error(ViolationKind::DisjunctiveHead, where, "'" + raw + "'");
            else
                error(ViolationKind::BadToken, where, "'|' in tail token '" + raw + "'");
            ok = false;
        }
        if (s.reserved) {
            error(ViolationKind::ReservedPrefix, where, "'" + raw + "'");
            ok = false;
        }
        return ok;
    }
};

std::string edge_where(const std::string& peer, const char* kind, size_t i) {
    return "peers[" + peer + "]." + kind + "[" + std::to_string(i) + "]";
}

}  // namespace

std::vector<Violation> validate_taxonomy(const std::vector<std::string>& terms,
                                         const std::vector<RawEdge>& edges) {
    RawNetwork raw;
    RawPeer p;
    p.id = "self";
    p.terms = terms;
    p.edges = edges;
    raw.peers.push_back(std::move(p));
    return validate(raw);
}

std::vector<Violation> validate(const RawNetwork& raw) {
    std::vector<Violation> out;
    Checker ck{out};

    if (raw.peers.empty()) {
        ck.error(ViolationKind::EmptyNetwork, "peers", "a network needs at least one peer");
        return out;
    }

    // declared terms, qualified by peer
    std::set<std::string> peer_ids;
    std::set<std::string> declared;  // "peer:name"
    for (const auto& p : raw.peers) {
        std::string pwhere = "peers[" + p.id + "]";
        if (p.id.empty() || has_whitespace(p.id) || p.id.find(':') != std::string::npos)
            ck.error(ViolationKind::BadToken, pwhere, "peer id '" + p.id + "'");
        if (!peer_ids.insert(p.id).second)
            ck.error(ViolationKind::DuplicatePeerId, pwhere, p.id);
        for (const auto& t : p.terms) {
            TokenShape s = classify(t);
            if (s.bad || s.negated || s.disjunctive || t.find(':') != std::string::npos) {
                ck.error(ViolationKind::BadToken, pwhere + ".terms", "'" + t + "'");
                continue;
            }
            if (s.reserved) {
                ck.error(ViolationKind::ReservedPrefix, pwhere + ".terms", "'" + t + "'");
                continue;
            }
            if (!declared.insert(p.id + ":" + t).second)
                ck.error(ViolationKind::DuplicateTerm, pwhere + ".terms", "'" + t + "'");
        }
    }

    auto declared_here = [&](const std::string& peer, const std::string& token) {
        // bare token -> local term; qualified -> as written
        std::string q = token.find(':') == std::string::npos ? peer + ":" + token : token;
        return declared.count(q) > 0;
    };

    for (const auto& p : raw.peers) {
        // local edges: bare local names only
        for (size_t i = 0; i < p.edges.size(); ++i) {
            const RawEdge& e = p.edges[i];
            std::string where = edge_where(p.id, "edges", i);
            bool head_ok = ck.check_token(e.head, where, true);
            if (head_ok && e.head.find(':') != std::string::npos) {
                ck.error(ViolationKind::ForeignTermInEdge, where, "head '" + e.head + "'");
                head_ok = false;
            }
            if (head_ok && !declared_here(p.id, e.head))
                ck.error(ViolationKind::UnknownTerm, where, "head '" + e.head + "'");
            if (e.tail.empty()) ck.error(ViolationKind::BadToken, where, "empty tail");
            bool head_in_tail = false;
            for (const auto& u : e.tail) {
                if (!ck.check_token(u, where, false)) continue;
                if (u.find(':') != std::string::npos) {
                    ck.error(ViolationKind::ForeignTermInEdge, where, "tail '" + u + "'");
                    continue;
                }
                if (!declared_here(p.id, u))
                    ck.error(ViolationKind::UnknownTerm, where, "tail '" + u + "'");
                if (u == e.head) head_in_tail = true;
            }
            if (head_in_tail)
                ck.warn(ViolationKind::HeadInTail, where, "edge dropped: head '" + e.head + "'");
        }
        // articulations: local head, qualified foreign tails
        for (size_t i = 0; i < p.articulations.size(); ++i) {
            const RawEdge& e = p.articulations[i];
            std::string where = edge_where(p.id, "articulations", i);
            bool head_ok = ck.check_token(e.head, where, true);
            if (head_ok && e.head.find(':') != std::string::npos) {
                ck.error(ViolationKind::ForeignTermInEdge, where,
                         "articulation head must be local: '" + e.head + "'");
                head_ok = false;
            }
            if (head_ok && !declared_here(p.id, e.head))
                ck.error(ViolationKind::UnknownTerm, where, "head '" + e.head + "'");
            if (e.tail.empty()) ck.error(ViolationKind::BadToken, where, "empty tail");
            for (const auto& u : e.tail) {
                if (!ck.check_token(u, where, false)) continue;
                auto colon = u.find(':');
                if (colon == std::string::npos || u.substr(0, colon) == p.id) {
                    ck.error(ViolationKind::LocalTermInArticulationTail, where, "'" + u + "'");
                    continue;
                }
                if (!declared.count(u))
                    ck.error(ViolationKind::DanglingForeignTerm, where, "'" + u + "'");
            }
        }
        // interpretation keys
        for (const auto& [t, objs] : p.interp) {
            std::string where = "peers[" + p.id + "].interp[" + t + "]";
            if (!declared_here(p.id, t) || t.find(':') != std::string::npos)
                ck.error(ViolationKind::UnknownTerm, where, "'" + t + "'");
            for (const auto& o : objs)
                if (o.empty() || has_whitespace(o))
                    ck.error(ViolationKind::BadToken, where, "object '" + o + "'");
        }
    }
    return out;
}

Network build_network(const RawNetwork& raw) {
    auto violations = validate(raw);
    if (has_errors(violations)) {
        std::string msg = "invalid network:";
        for (const auto& v : violations)
            if (!v.warning) msg += "\n  " + v.format();
        throw SchemaError(msg);
    }

    Network net;
    auto qualify_token = [](const std::string& peer, const std::string& token) -> Term {
        return token.find(':') == std::string::npos ? qualify(peer, token) : Term(token);
    };

    for (const auto& p : raw.peers) {
        ArticulatedSource peer;
        peer.peer_id = p.id;
        for (const auto& t : p.terms)
            peer.source.taxonomy.terminology.insert(qualify_token(p.id, t));
        for (const auto& e : p.edges) {
            Term head = qualify_token(p.id, e.head);
            TermSet tail;
            bool drop = false;
            for (const auto& u : e.tail) {
                Term ut = qualify_token(p.id, u);
                if (ut == head) drop = true;
                tail.insert(std::move(ut));
            }
            if (drop) continue;  // vacuous under evaluation
            peer.source.taxonomy.edges.insert(Hyperedge(std::move(tail), std::move(head)));
        }
        for (const auto& e : p.articulations) {
            Term head = qualify_token(p.id, e.head);
            TermSet tail;
            for (const auto& u : e.tail) tail.insert(Term(u));
            peer.articulations.insert(Hyperedge(std::move(tail), std::move(head)));
        }
        for (const auto& [t, objs] : p.interp) {
            Term term = qualify_token(p.id, t);
            for (const auto& o : objs) peer.source.interpretation.add(term, ObjectId(o));
        }
        net.peers.emplace(p.id, std::move(peer));
    }
    return net;
}

}  // namespace taxonet
