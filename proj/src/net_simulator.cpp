#include <algorithm>

#include "taxonet/net/simulator.hpp"

namespace taxonet::net {

Simulator::Simulator(const Network& network, CachePolicy policy, SchedulerConfig scheduler,
                     std::optional<size_t> cache_capacity)
    : bus_(scheduler), policy_(policy) {
    // term -> owner, shared by every peer
    auto owners = std::make_shared<std::map<Term, PeerId>>();
    for (const auto& [id, peer] : network.peers)
        for (const auto& t : peer.source.terminology()) (*owners)[t] = id;

    for (const auto& [id, art] : network.peers) {
        Peer p(id, art, policy);
        p.set_owner_lookup([owners](const Term& t) {
            auto it = owners->find(t);
            return it == owners->end() ? PeerId{} : it->second;
        });
        if (cache_capacity) p.set_cache_capacity(cache_capacity);
        peers_.emplace(id, std::move(p));
    }
    // each peer knows the articulations of other peers that mention its terms
    for (const auto& [id, art] : network.peers) {
        for (const auto& e : art.articulations) {
            std::set<PeerId> tail_owners;
            for (const auto& u : e.tail) tail_owners.insert(u.peer());
            for (const auto& owner : tail_owners) {
                auto it = peers_.find(owner);
                if (it != peers_.end() && owner != id)
                    it->second.add_foreign_articulation({e.tail, e.head, id});
            }
        }
    }
}

Peer& Simulator::peer(const PeerId& id) {
    auto it = peers_.find(id);
    if (it == peers_.end()) throw IllegalStateError("no such peer: " + id);
    return it->second;
}

const Peer& Simulator::peer(const PeerId& id) const {
    auto it = peers_.find(id);
    if (it == peers_.end()) throw IllegalStateError("no such peer: " + id);
    return it->second;
}

size_t Simulator::live_log_objects() const {
    size_t n = 0;
    for (const auto& [id, p] : peers_) n += p.live_log_objects();
    return n;
}

QueryHandle Simulator::submit_query(const PeerId& peer_id, const Query& raw) {
    Peer& p = peer(peer_id);
    // user queries are written in the peer's own language: bare names
    std::vector<Conjunction> disjuncts;
    for (const auto& d : raw.disjuncts) {
        TermSet qualified;
        for (const auto& t : d.terms)
            qualified.insert(t.qualified() ? t : qualify(peer_id, t.name));
        disjuncts.push_back(Conjunction(std::move(qualified)));
    }
    Query q(std::move(disjuncts));
    for (const auto& t : q.terms())
        if (!p.terminology().count(t))
            throw UnknownTermError("term " + t.name + " is not in the language of peer " +
                                   peer_id);

    if (policy_ == CachePolicy::heads) {
        QueryHandle handle;
        handle.state_->result = warm_and_eval(peer_id, q, 1'000'000);
        return handle;
    }

    Term fresh = p.modify_taxonomy(q);
    QueryId root = p.new_query_id();
    QueryHandle handle;
    pending_.emplace(root, RootQuery{peer_id, fresh, handle});
    ++stats_.asks;
    bus_.send(Envelope{peer_id, peer_id, AskMsg{peer_id, root, fresh, TermSet{fresh}}});
    return handle;
}

ObjSet Simulator::warm_and_eval(const PeerId& peer_id, const Query& q, size_t budget) {
    Peer& p = peer(peer_id);
    for (const auto& t : p.warm_candidates(q)) {
        if (p.term_cached(t)) continue;
        Term fresh = p.modify_taxonomy(Query::single(t));
        QueryId root = p.new_query_id();
        QueryHandle handle;
        pending_.emplace(root, RootQuery{peer_id, fresh, handle});
        ++stats_.asks;
        bus_.send(Envelope{peer_id, peer_id, AskMsg{peer_id, root, fresh, TermSet{fresh}}});
        drain(budget);
        if (!handle.done()) throw IllegalStateError("warm query did not resolve");
        p.cache_put(t, handle.result());
    }
    return p.local_eval(q);
}

void Simulator::deliver(Envelope e) {
    if (trace_) trace_(TraceEvent{e.dest, e});
    auto it = peers_.find(e.dest);
    if (it == peers_.end()) {
        ++stats_.protocol_errors;
        return;
    }
    if (auto* ask = std::get_if<AskMsg>(&e.payload)) {
        it->second.on_ask(*ask, bus_, stats_);
    } else if (auto* tell = std::get_if<TellMsg>(&e.payload)) {
        auto root = pending_.find(tell->qid);
        if (root != pending_.end()) {
            RootQuery rq = std::move(root->second);
            pending_.erase(root);
            peer(rq.peer).cleanup_taxonomy(rq.fresh);
            rq.handle.state_->result = tell->res;
        } else {
            it->second.on_tell(*tell, bus_, stats_);
        }
    } else if (auto* seed = std::get_if<SeedMsg>(&e.payload)) {
        it->second.on_seed(*seed);
    }
    size_t live = live_log_objects();
    if (live > stats_.log_objects_peak) stats_.log_objects_peak = live;
}

void Simulator::drain(size_t budget) {
    size_t delivered = 0;
    while (!bus_.empty()) {
        if (++delivered > budget)
            throw DivergedError("message budget exceeded: " + std::to_string(budget));
        deliver(bus_.next());
    }
}

RunStats Simulator::run_until_quiescent(size_t budget) {
    drain(budget);
    RunStats window = stats_;
    total_ += window;
    stats_ = RunStats{};
    return window;
}

std::pair<ObjSet, RunStats> Simulator::run_query(const PeerId& peer_id, const Query& q,
                                                 size_t budget) {
    QueryHandle handle = submit_query(peer_id, q);
    RunStats stats = run_until_quiescent(budget);
    if (!handle.done()) throw IllegalStateError("query did not resolve at quiescence");
    return {handle.result(), stats};
}

}  // namespace taxonet::net
