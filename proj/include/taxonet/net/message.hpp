#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "taxonet/network.hpp"

namespace taxonet::net {

// Query identifier: origin peer plus a counter that is never reused,
// rendered "Pa#7".
struct QueryId {
    PeerId origin;
    uint64_t counter = 0;

    std::string str() const { return origin + "#" + std::to_string(counter); }
    static QueryId parse(const std::string& text);

    bool operator==(const QueryId& o) const { return origin == o.origin && counter == o.counter; }
    bool operator!=(const QueryId& o) const { return !(*this == o); }
    bool operator<(const QueryId& o) const {
        if (origin != o.origin) return origin < o.origin;
        return counter < o.counter;
    }
};

enum class Flag { partial = 0, full = 1 };

inline Flag min_flag(Flag a, Flag b) { return a < b ? a : b; }
const char* to_string(Flag f);

// Request to evaluate a term query; visited carries the evaluation path and
// always contains t.
struct AskMsg {
    PeerId pid;  // sender, to receive the eventual Tell
    QueryId qid;
    Term t;
    TermSet visited;

    bool operator==(const AskMsg& o) const {
        return pid == o.pid && qid == o.qid && t == o.t && visited == o.visited;
    }
};

// The result of an evaluation. The term and flag ride along only under the
// caching protocols; the base handler ignores them.
struct TellMsg {
    QueryId qid;
    ObjSet res;
    std::optional<Term> t;
    std::optional<Flag> flag;

    bool operator==(const TellMsg& o) const {
        return qid == o.qid && res == o.res && t == o.t && flag == o.flag;
    }
};

// Wire format: one JSON object per line, type "ask" or "tell", sets sorted.
std::string encode(const AskMsg& m);
std::string encode(const TellMsg& m);

struct DecodedMessage {
    std::optional<AskMsg> ask;
    std::optional<TellMsg> tell;
};

DecodedMessage decode(const std::string& line);

}  // namespace taxonet::net
