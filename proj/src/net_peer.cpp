#include <algorithm>

#include "taxonet/net/peer.hpp"

namespace taxonet::net {

std::optional<CachePolicy> parse_cache_policy(const std::string& name) {
    if (name == "none") return CachePolicy::none;
    if (name == "local") return CachePolicy::local;
    if (name == "push") return CachePolicy::push;
    if (name == "push-ext") return CachePolicy::push_ext;
    if (name == "heads") return CachePolicy::heads;
    return std::nullopt;
}

const char* to_string(CachePolicy p) {
    switch (p) {
        case CachePolicy::none: return "none";
        case CachePolicy::local: return "local";
        case CachePolicy::push: return "push";
        case CachePolicy::push_ext: return "push-ext";
        case CachePolicy::heads: return "heads";
    }
    return "?";
}

ObjSet compute_answer(const QueryProgram& qp) {
    ObjSet result;
    for (const auto& sp : qp) {
        bool first = true;
        ObjSet branch;
        for (const auto& call : sp) {
            if (call.is_open()) throw IllegalStateError("open call in query program");
            if (first) {
                branch = call.result;
                first = false;
            } else {
                branch = set_intersect(branch, call.result);
            }
        }
        result.insert(branch.begin(), branch.end());
    }
    return result;
}

const ObjSet* CacheStore::get(const TermSet& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    touch(key);
    return &it->second;
}

void CacheStore::put(const TermSet& key, ObjSet value) {
    entries_[key] = std::move(value);
    touch(key);
    if (capacity_ && entries_.size() > *capacity_) {
        const TermSet& victim = lru_.back();
        entries_.erase(victim);
        lru_.pop_back();
    }
}

void CacheStore::touch(const TermSet& key) {
    lru_.remove(key);
    lru_.push_front(key);
}

void CacheStore::clear() {
    entries_.clear();
    lru_.clear();
}

Peer::Peer(PeerId id, const ArticulatedSource& art, CachePolicy policy)
    : id_(std::move(id)),
      terminology_(art.source.terminology()),
      interp_(art.source.interpretation),
      policy_(policy) {
    edges_ = art.source.edges();
    edges_.insert(art.articulations.begin(), art.articulations.end());
    for (const auto& e : art.articulations) articulation_heads_.insert(e.head);
}

std::vector<const Hyperedge*> Peer::in_edges(const Term& t) const {
    std::vector<const Hyperedge*> out;
    for (const auto& e : edges_)
        if (e.head == t) out.push_back(&e);
    for (const auto& e : embedded_edges_)
        if (e.head == t) out.push_back(&e);
    return out;
}

PeerId Peer::owner(const Term& u) const {
    if (embedded_terms_.count(u)) return id_;
    PeerId p = owner_ ? owner_(u) : PeerId{};
    return p.empty() ? id_ : p;
}

Term Peer::modify_taxonomy(const Query& q) {
    Term fresh = qualify(id_, "__q" + std::to_string(embed_counter_++));
    embedded_terms_.insert(fresh);
    for (const auto& d : q.disjuncts) embedded_edges_.insert(Hyperedge(d.terms, fresh));
    return fresh;
}

void Peer::cleanup_taxonomy(const Term& fresh) {
    embedded_terms_.erase(fresh);
    for (auto it = embedded_edges_.begin(); it != embedded_edges_.end();)
        it = (it->head == fresh) ? embedded_edges_.erase(it) : std::next(it);
}

void Peer::send_ask(Bus& bus, RunStats& stats, const PeerId& dest, AskMsg m) {
    ++stats.asks;
    if (dest != id_) ++stats.interpeer_asks;
    bus.send(Envelope{id_, dest, std::move(m)});
}

void Peer::send_tell(Bus& bus, RunStats& stats, const PeerId& dest, TellMsg m) {
    ++stats.tells;
    if (dest != id_) ++stats.interpeer_tells;
    bus.send(Envelope{id_, dest, std::move(m)});
}

void Peer::persist(LogObject obj) {
    for (const auto& sp : obj.qp)
        for (const auto& call : sp)
            if (call.is_open()) open_call_parent_[*call.open_id] = obj.qid;
    log_[obj.qid] = std::move(obj);
}

std::optional<LogObject> Peer::delete1(const QueryId& open_call) {
    auto parent = open_call_parent_.find(open_call);
    if (parent == open_call_parent_.end()) return std::nullopt;
    QueryId owner_qid = parent->second;
    open_call_parent_.erase(parent);
    auto it = log_.find(owner_qid);
    if (it == log_.end()) return std::nullopt;
    LogObject obj = std::move(it->second);
    log_.erase(it);
    return obj;
}

void Peer::on_ask(const AskMsg& m, Bus& bus, RunStats& stats) {
    if (!m.visited.count(m.t) || (!terminology_.count(m.t) && !embedded_terms_.count(m.t))) {
        ++stats.protocol_errors;
        return;
    }
    const bool caching = policy_ != CachePolicy::none;
    const bool ext = policy_ == CachePolicy::push_ext;
    const bool alt = policy_ == CachePolicy::heads;

    if (caching) {
        if (const ObjSet* hit = cache_.get(TermSet{m.t})) {
            ++stats.cache_hits;
            TellMsg reply{m.qid, *hit, std::nullopt, std::nullopt};
            if (!alt) {
                reply.t = m.t;
                if (ext) reply.flag = Flag::full;
            }
            send_tell(bus, stats, m.pid, std::move(reply));
            return;
        }
        ++stats.cache_misses;
        // |A| = 2 exactly when t is a term of the original query: the root
        // embeds a fresh term, so the first real Ask carries {fresh, t}.
        if (!alt && m.visited.size() == 2) to_be_cached_.insert(m.t);
    }

    size_t n = 0;
    QueryProgram qp;
    std::vector<PendingAsk> queue;
    Flag flag = Flag::full;

    for (const Hyperedge* h : in_edges(m.t)) {
        if (!disjoint(h->tail, m.visited)) {
            if (ext) flag = Flag::partial;
            continue;
        }
        SubProgram sp;
        bool edge_foreign = std::any_of(h->tail.begin(), h->tail.end(),
                                        [&](const Term& u) { return owner(u) != id_; });
        const ObjSet* conj = nullptr;
        if (caching && !alt && edge_foreign) conj = cache_.get(h->tail);
        if (conj) {
            sp.push_back(Call::closed(*conj));
        } else {
            for (const auto& u : h->tail) {
                const ObjSet* hit = nullptr;
                if (caching && (alt || owner(u) == id_)) hit = cache_.get(TermSet{u});
                if (hit) {
                    ++stats.cache_hits;
                    sp.push_back(Call::closed(*hit));
                    continue;
                }
                QueryId sub = new_query_id();
                sp.push_back(Call::open(sub));
                ++n;
                TermSet extended = m.visited;
                extended.insert(u);
                queue.push_back({owner(u), AskMsg{id_, sub, u, std::move(extended)}});
            }
        }
        qp.push_back(std::move(sp));
    }

    if (n > 0) {
        persist(LogObject{m.pid, m.qid, m.t, n, std::move(qp), flag});
        if (log_.size() > stats.log_objects_peak) stats.log_objects_peak = log_.size();
        for (auto& pending : queue)
            send_ask(bus, stats, pending.dest, std::move(pending.msg));
        return;
    }

    // no open sub-calls: answer directly, composing any cached sub-programs
    ObjSet res = interp(m.t);
    if (!qp.empty()) {
        ObjSet s = compute_answer(qp);
        res.insert(s.begin(), s.end());
    }
    TellMsg reply{m.qid, std::move(res), std::nullopt, std::nullopt};
    if (caching && !alt) {
        reply.t = m.t;
        if (ext) reply.flag = flag;
    }
    send_tell(bus, stats, m.pid, std::move(reply));
}

void Peer::cache_and_forward(const Term& t, const ObjSet& r, Bus& bus, RunStats& stats,
                             bool forward) {
    cache_.put(TermSet{t}, r);
    to_be_cached_.erase(t);
    if (!forward) return;
    for (const auto& fa : foreign_artics_) {
        if (!fa.tail.count(t)) continue;
        bool all_cached = true;
        ObjSet conj;
        bool first = true;
        for (const auto& u : fa.tail) {
            const ObjSet* hit = cache_.get(TermSet{u});
            if (!hit) {
                all_cached = false;
                break;
            }
            if (first) {
                conj = *hit;
                first = false;
            } else {
                conj = set_intersect(conj, *hit);
            }
        }
        if (!all_cached) continue;
        ++stats.forwards;
        bus.send(Envelope{id_, fa.head_owner, SeedMsg{fa.tail, std::move(conj)}});
    }
}

void Peer::on_tell(const TellMsg& m, Bus& bus, RunStats& stats) {
    const bool caching = policy_ != CachePolicy::none;
    const bool ext = policy_ == CachePolicy::push_ext;
    const bool alt = policy_ == CachePolicy::heads;

    // answers for original-query terms are always full and safe to cache
    if (caching && !alt && m.t && to_be_cached_.count(*m.t)) {
        to_be_cached_.erase(*m.t);
        bool forward = policy_ == CachePolicy::push || ext;
        cache_and_forward(*m.t, m.res, bus, stats, forward);
    }

    auto obj = delete1(m.qid);
    if (!obj) {
        ++stats.protocol_errors;
        return;
    }

    // close the call
    for (auto& sp : obj->qp)
        for (auto& call : sp)
            if (call.is_open() && *call.open_id == m.qid) call = Call::closed(m.res);

    Flag combined = min_flag(obj->flag, m.flag.value_or(Flag::full));

    if (obj->open_calls == 1) {
        ObjSet s = compute_answer(obj->qp);
        if (!terminology_.count(obj->t)) {
            // embedded root: this completion wakes the waiting query
            TellMsg done{obj->qid, std::move(s), std::nullopt, std::nullopt};
            if (ext) done.flag = Flag::full;
            send_tell(bus, stats, obj->pid, std::move(done));
            return;
        }
        ObjSet res = set_union(s, interp(obj->t));
        TellMsg out{obj->qid, res, std::nullopt, std::nullopt};
        if (caching && !alt) {
            out.t = obj->t;
            if (ext) out.flag = combined;
        }
        send_tell(bus, stats, obj->pid, std::move(out));
        if (ext && combined == Flag::full && articulation_heads_.count(obj->t))
            cache_and_forward(obj->t, res, bus, stats, true);
        return;
    }

    obj->open_calls -= 1;
    obj->flag = combined;
    persist(std::move(*obj));
}

void Peer::on_seed(const SeedMsg& m) { cache_.put(m.key, m.objs); }

TermSet Peer::warm_candidates(const Query& q) const {
    // ancestry over this peer's own edge set
    TermSet visited = q.terms();
    std::vector<Term> frontier(visited.begin(), visited.end());
    while (!frontier.empty()) {
        Term x = std::move(frontier.back());
        frontier.pop_back();
        for (const Hyperedge* e : in_edges(x))
            for (const auto& u : e->tail)
                if (visited.insert(u).second) frontier.push_back(u);
    }
    TermSet warm;
    for (const auto& t : visited)
        if (terminology_.count(t) && articulation_heads_.count(t)) warm.insert(t);
    return warm;
}

ObjSet Peer::local_eval_term(const Term& x, const TermSet& visited) {
    if (const ObjSet* hit = cache_.get(TermSet{x})) return *hit;
    ObjSet result = interp_(x);
    for (const Hyperedge* e : in_edges(x)) {
        if (!disjoint(e->tail, visited)) continue;
        bool first = true;
        ObjSet branch;
        for (const auto& u : e->tail) {
            if (!terminology_.count(u) && !embedded_terms_.count(u))
                throw IllegalStateError("local evaluation reached uncached foreign term " +
                                        u.name);
            TermSet extended = visited;
            extended.insert(u);
            ObjSet sub = local_eval_term(u, extended);
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

ObjSet Peer::local_eval(const Query& q) {
    Term fresh = modify_taxonomy(q);
    ObjSet result;
    try {
        result = local_eval_term(fresh, TermSet{fresh});
    } catch (...) {
        cleanup_taxonomy(fresh);
        throw;
    }
    cleanup_taxonomy(fresh);
    return result;
}

}  // namespace taxonet::net
