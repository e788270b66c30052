#pragma once

#include <string>
#include <vector>

#include "taxonet/network.hpp"

namespace taxonet {

// Unvalidated taxonomy relationship as read from a file: raw tokens. A tail
// token may carry a '!' prefix and a head token a '|' — both are rejected.
struct RawEdge {
    std::vector<std::string> tail;
    std::string head;
};

struct RawPeer {
    std::string id;
    std::vector<std::string> terms;
    std::vector<RawEdge> edges;
    std::map<std::string, std::vector<std::string>> interp;
    std::vector<RawEdge> articulations;  // tails qualified "peer:name"
};

struct RawNetwork {
    std::vector<RawPeer> peers;
    std::vector<std::string> universe;  // optional; empty when absent
};

enum class ViolationKind {
    NegationInTaxonomy,   // '!' literal inside a taxonomy relationship
    DisjunctiveHead,      // '|' on the right-hand side of a relationship
    ReservedPrefix,       // user term starting with "__"
    UnknownTerm,          // edge or interpretation references an undeclared term
    HeadInTail,           // vacuous edge, dropped (warning)
    DuplicatePeerId,
    DuplicateTerm,
    DanglingForeignTerm,  // articulation tail names a term no peer declares
    ForeignTermInEdge,    // local edge uses a qualified/foreign term
    LocalTermInArticulationTail,
    BadToken,             // empty name, whitespace, stray ':' and the like
    EmptyNetwork,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    bool warning = false;  // warnings do not fail validation
    std::string where;     // path into the document, e.g. "peers[Pa].edges[2]"
    std::string detail;

    std::string format() const;
};

// Full raw-network validation; never throws. Errors (non-warnings) mean the
// network must not be constructed.
std::vector<Violation> validate(const RawNetwork& raw);

inline bool has_errors(const std::vector<Violation>& vs) {
    for (const auto& v : vs)
        if (!v.warning) return true;
    return false;
}

// Builds the typed network from validated raw input, qualifying every term by
// its owning peer and dropping head-in-tail edges. Call validate() first;
// throws SchemaError if errors slipped through.
Network build_network(const RawNetwork& raw);

// Raw view of a single source (single peer, bare names), for direct
// validation of taxonomy relationships.
std::vector<Violation> validate_taxonomy(const std::vector<std::string>& terms,
                                         const std::vector<RawEdge>& edges);

}  // namespace taxonet
