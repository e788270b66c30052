#pragma once

#include <memory>

#include "taxonet/net/peer.hpp"

namespace taxonet::net {

// Resolves once the root query's final Tell is delivered.
class QueryHandle {
public:
    bool done() const { return state_->result.has_value(); }
    const ObjSet& result() const {
        if (!state_->result) throw IllegalStateError("query not yet resolved");
        return *state_->result;
    }

private:
    friend class Simulator;
    struct State {
        std::optional<ObjSet> result;
    };
    std::shared_ptr<State> state_ = std::make_shared<State>();
};

struct TraceEvent {
    PeerId dest;
    Envelope envelope;
};

// Deterministic single-process network simulator: one peer state machine per
// articulated source, one bus, messages delivered one at a time.
class Simulator {
public:
    explicit Simulator(const Network& network, CachePolicy policy = CachePolicy::none,
                       SchedulerConfig scheduler = {},
                       std::optional<size_t> cache_capacity = std::nullopt);

    // Embeds the query at the peer and enqueues the root Ask. Under the heads
    // policy this instead warms the needed articulation heads (running the bus
    // to quiescence per warm query) and resolves the handle locally.
    QueryHandle submit_query(const PeerId& peer, const Query& q);

    // Delivers until the bus is empty; returns the statistics accumulated
    // since the previous call. Throws DivergedError past the message budget.
    RunStats run_until_quiescent(size_t budget = 1'000'000);

    // submit + run in one step.
    std::pair<ObjSet, RunStats> run_query(const PeerId& peer, const Query& q,
                                          size_t budget = 1'000'000);

    void set_trace(std::function<void(const TraceEvent&)> sink) { trace_ = std::move(sink); }

    Peer& peer(const PeerId& id);
    const Peer& peer(const PeerId& id) const;
    size_t live_log_objects() const;
    size_t pending_roots() const { return pending_.size(); }
    const RunStats& total_stats() const { return total_; }

    // Raw delivery, for fault-injection tests.
    void inject(Envelope e) { bus_.send(std::move(e)); }

private:
    struct RootQuery {
        PeerId peer;
        Term fresh;
        QueryHandle handle;
    };

    void deliver(Envelope e);
    void drain(size_t budget);
    ObjSet warm_and_eval(const PeerId& peer, const Query& q, size_t budget);

    std::map<PeerId, Peer> peers_;
    Bus bus_;
    CachePolicy policy_;
    RunStats stats_;  // running window for run_until_quiescent
    RunStats total_;
    std::map<QueryId, RootQuery> pending_;
    std::function<void(const TraceEvent&)> trace_;
};

}  // namespace taxonet::net
