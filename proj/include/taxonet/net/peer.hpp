#pragma once

#include <functional>
#include <list>
#include <optional>

#include "taxonet/net/bus.hpp"

namespace taxonet::net {

enum class CachePolicy { none, local, push, push_ext, heads };

std::optional<CachePolicy> parse_cache_policy(const std::string& name);
const char* to_string(CachePolicy p);

// A sub-query slot: open (awaiting its Tell) or closed with a result.
struct Call {
    std::optional<QueryId> open_id;
    ObjSet result;

    static Call open(QueryId id) { return Call{std::move(id), {}}; }
    static Call closed(ObjSet r) { return Call{std::nullopt, std::move(r)}; }
    bool is_open() const { return open_id.has_value(); }
};

// One sub-program per in-edge of the query term; its calls are the tail terms.
using SubProgram = std::vector<Call>;
using QueryProgram = std::vector<SubProgram>;

// Union over sub-programs of the intersection of their results. All calls
// must be closed.
ObjSet compute_answer(const QueryProgram& qp);

// Per-query evaluation state persisted in the peer's log.
struct LogObject {
    PeerId pid;  // who asked
    QueryId qid;
    Term t;
    size_t open_calls = 0;
    QueryProgram qp;
    Flag flag = Flag::full;
};

// Answer cache keyed by term (singleton) or a foreign conjunction (the tail
// of an articulation). Entries always hold full network answers. Optional
// LRU capacity.
class CacheStore {
public:
    void set_capacity(std::optional<size_t> cap) { capacity_ = cap; }

    const ObjSet* get(const TermSet& key);
    void put(const TermSet& key, ObjSet value);
    bool contains(const TermSet& key) const { return entries_.count(key) > 0; }
    size_t size() const { return entries_.size(); }
    void clear();

private:
    void touch(const TermSet& key);

    std::map<TermSet, ObjSet> entries_;
    std::list<TermSet> lru_;  // most recent in front
    std::optional<size_t> capacity_;
};

// An articulation of another peer with at least one tail term owned by this
// peer; used by the push policies to forward conjunction answers.
struct ForeignArticulation {
    TermSet tail;
    Term head;
    PeerId head_owner;

    bool operator<(const ForeignArticulation& o) const {
        if (head != o.head) return head < o.head;
        return tail < o.tail;
    }
};

// A peer's protocol state machine. Processes one message at a time; all
// sends go through the supplied bus.
class Peer {
public:
    Peer(PeerId id, const ArticulatedSource& art, CachePolicy policy);

    const PeerId& id() const { return id_; }
    const TermSet& terminology() const { return terminology_; }
    const Interpretation& interpretation() const { return interp_; }

    void set_owner_lookup(std::function<PeerId(const Term&)> f) { owner_ = std::move(f); }
    void add_foreign_articulation(ForeignArticulation fa) { foreign_artics_.insert(std::move(fa)); }
    void set_cache_capacity(std::optional<size_t> cap) { cache_.set_capacity(cap); }

    // Adds the fresh root term and one edge per disjunct; the reverse undoes it.
    Term modify_taxonomy(const Query& q);
    void cleanup_taxonomy(const Term& fresh);

    QueryId new_query_id() { return QueryId{id_, ++qid_counter_}; }

    void on_ask(const AskMsg& m, Bus& bus, RunStats& stats);
    void on_tell(const TellMsg& m, Bus& bus, RunStats& stats);
    void on_seed(const SeedMsg& m);

    size_t live_log_objects() const { return log_.size(); }
    bool term_cached(const Term& t) const { return cache_.contains(TermSet{t}); }
    const ObjSet* cached(const Term& t) { return cache_.get(TermSet{t}); }
    void cache_put(const Term& t, ObjSet value) { cache_.put(TermSet{t}, std::move(value)); }

    // Local terms heading an articulation that lie on the local evaluation
    // ancestry of the query's terms — the warm set of the heads policy.
    TermSet warm_candidates(const Query& q) const;

    // Evaluation over the local B-graph with cached terms as leaves. Every
    // articulation head on the ancestry must be cached.
    ObjSet local_eval(const Query& q);

    const EdgeSet& edges() const { return edges_; }

private:
    struct PendingAsk {
        PeerId dest;
        AskMsg msg;
    };

    std::vector<const Hyperedge*> in_edges(const Term& t) const;
    PeerId owner(const Term& u) const;
    const ObjSet& interp(const Term& t) const { return interp_(t); }
    void send_tell(Bus& bus, RunStats& stats, const PeerId& dest, TellMsg m);
    void send_ask(Bus& bus, RunStats& stats, const PeerId& dest, AskMsg m);
    void persist(LogObject obj);
    std::optional<LogObject> delete1(const QueryId& open_call);
    void cache_and_forward(const Term& t, const ObjSet& r, Bus& bus, RunStats& stats,
                           bool forward);
    ObjSet local_eval_term(const Term& x, const TermSet& visited);

    PeerId id_;
    TermSet terminology_;
    EdgeSet edges_;           // local taxonomy + own articulations
    EdgeSet embedded_edges_;  // live root-query embeddings
    TermSet embedded_terms_;
    Interpretation interp_;
    CachePolicy policy_;

    std::function<PeerId(const Term&)> owner_;
    std::set<ForeignArticulation> foreign_artics_;
    TermSet articulation_heads_;

    uint64_t qid_counter_ = 0;
    uint64_t embed_counter_ = 0;
    std::map<QueryId, LogObject> log_;             // keyed by the object's own qid
    std::map<QueryId, QueryId> open_call_parent_;  // sub-call qid -> log object qid

    CacheStore cache_;
    TermSet to_be_cached_;
};

}  // namespace taxonet::net
