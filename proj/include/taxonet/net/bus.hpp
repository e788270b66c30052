#pragma once

#include <deque>
#include <random>
#include <variant>

#include "taxonet/net/message.hpp"

namespace taxonet::net {

// Cache-seeding delivery used by the push policies: a (conjunction, answer)
// pair sent to the articulating peer. Internal to the simulator, not part of
// the ask/tell wire schema.
struct SeedMsg {
    TermSet key;
    ObjSet objs;
};

struct Envelope {
    PeerId src;
    PeerId dest;
    std::variant<AskMsg, TellMsg, SeedMsg> payload;
};

struct RunStats {
    size_t asks = 0;
    size_t tells = 0;
    size_t forwards = 0;        // cache seeds sent
    size_t interpeer_asks = 0;  // src != dest
    size_t interpeer_tells = 0;
    size_t cache_hits = 0;
    size_t cache_misses = 0;
    size_t protocol_errors = 0;
    size_t log_objects_peak = 0;

    RunStats& operator+=(const RunStats& o) {
        asks += o.asks;
        tells += o.tells;
        forwards += o.forwards;
        interpeer_asks += o.interpeer_asks;
        interpeer_tells += o.interpeer_tells;
        cache_hits += o.cache_hits;
        cache_misses += o.cache_misses;
        protocol_errors += o.protocol_errors;
        if (o.log_objects_peak > log_objects_peak) log_objects_peak = o.log_objects_peak;
        return *this;
    }
};

enum class SchedulerKind { fifo, random };

struct SchedulerConfig {
    SchedulerKind kind = SchedulerKind::fifo;
    uint64_t seed = 0;
};

// Reliable in-memory transport. FIFO delivers in enqueue order (so per-peer
// order holds); the random scheduler picks a pending message by seeded draw.
class Bus {
public:
    explicit Bus(SchedulerConfig cfg = {}) : cfg_(cfg), rng_(cfg.seed) {}

    void send(Envelope e) { queue_.push_back(std::move(e)); }
    bool empty() const { return queue_.empty(); }
    size_t pending() const { return queue_.size(); }

    Envelope next() {
        size_t i = 0;
        if (cfg_.kind == SchedulerKind::random && queue_.size() > 1) {
            std::uniform_int_distribution<size_t> pick(0, queue_.size() - 1);
            i = pick(rng_);
        }
        Envelope e = std::move(queue_[i]);
        queue_.erase(queue_.begin() + static_cast<long>(i));
        return e;
    }

private:
    SchedulerConfig cfg_;
    std::mt19937_64 rng_;
    std::deque<Envelope> queue_;
};

}  // namespace taxonet::net
