#pragma once

#include <map>
#include <string>

#include "taxonet/taxonomy.hpp"

namespace taxonet {

using PeerId = std::string;

// A peer: its own source plus articulations, hyperedges whose head is a local
// term and whose tail terms belong to foreign peers (possibly several).
struct ArticulatedSource {
    PeerId peer_id;
    Source source;
    EdgeSet articulations;
};

struct Network {
    std::map<PeerId, ArticulatedSource> peers;

    const ArticulatedSource* find_peer(const PeerId& id) const {
        auto it = peers.find(id);
        return it == peers.end() ? nullptr : &it->second;
    }

    // Owner of a qualified term, or empty when unknown.
    PeerId owner_of(const Term& t) const {
        PeerId p = t.peer();
        return peers.count(p) ? p : PeerId{};
    }

    TermSet all_terms() const {
        TermSet all;
        for (const auto& [id, peer] : peers)
            all.insert(peer.source.terminology().begin(), peer.source.terminology().end());
        return all;
    }
};

// The single source a network denotes: union of terminologies and
// interpretations, edges = all local taxonomies plus all articulations.
Source flatten(const Network& network);

}  // namespace taxonet
