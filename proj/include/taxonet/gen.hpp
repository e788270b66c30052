#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taxonet/network.hpp"

namespace taxonet {

// A collection of non-empty subsets of a ground set, the seed of the
// hitting-set instance family.
struct Collection {
    std::vector<std::vector<std::string>> sets;
};

// Source whose query term t is answered exactly by objects whose index hits
// every set of the collection: unary edges ({x}, u_j) for x in C_j plus the
// single hyperedge ({u_1..u_k}, t). Empty interpretation.
std::pair<Source, Term> gen_hitting(const Collection& c);

// Ladder of 2k+1 hyperedges ({u_i,v_i}, u_{i+1}) / ({u_i,v_i}, v_{i+1}) with
// the last rung ending at t; the number of cycle-free simple paths from u_1
// to t is 2^k. Empty interpretation.
std::pair<Source, Term> gen_chain(int k);

struct GenLimits {
    int max_peers = 3;
    int max_terms = 8;   // network-wide
    int max_edges = 12;  // local edges plus articulations
    int max_tail = 3;
    int max_objects = 8;
};

// Seeded, reproducible random network that passes validation. Term-to-term
// edges come back as 2-cycles 20% of the time so evaluation exercises the
// visited-set cuts.
Network gen_random(uint64_t seed, const GenLimits& limits = {});

}  // namespace taxonet
