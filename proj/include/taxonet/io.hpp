#pragma once

#include <optional>
#include <string>

#include "taxonet/validate.hpp"

namespace taxonet {

// JSON network file:
//   {"universe": [...],            // optional
//    "peers": [{"id": "Pa",
//               "terms": [...],
//               "edges": [{"tail": [...], "head": "..."}],
//               "interp": {"term": ["o1", ...]},
//               "articulations": [{"tail": ["Pb:b3"], "head": "a2"}]}]}
// Local names are bare; foreign tails are qualified. All sets serialize
// sorted, so dump(load(f)) is the canonical form of f.

RawNetwork parse_raw_network(const std::string& json_text);
RawNetwork load_raw_network(const std::string& path);

struct LoadResult {
    Network network;
    std::vector<Violation> warnings;
    ObjSet universe;  // from the optional "universe" key
    bool has_universe = false;
};

// Parse + validate + build. Throws SchemaError carrying the formatted
// violation list when validation fails.
LoadResult load_network(const std::string& path);
LoadResult load_network_from_text(const std::string& json_text);

std::string dump_network(const Network& network,
                         const std::optional<ObjSet>& universe = std::nullopt);

// Single-peer view with bare names; throws SchemaError on multi-peer files or
// files with articulations.
Source to_single_source(const Network& network);

}  // namespace taxonet
