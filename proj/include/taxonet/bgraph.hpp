#pragma once

#include <string>

#include "taxonet/taxonomy.hpp"

namespace taxonet {

// Sentinel vertex: source of every marking. Reserved, cannot collide with
// validated terminologies.
inline const Term kTrue{"__true"};

// Directed B-hypergraph: hyperedges with single-vertex heads, plus the
// distinguished TRUE vertex.
struct BGraph {
    TermSet vertices;  // terminology plus kTrue
    EdgeSet edges;

    bool has_vertex(const Term& t) const { return vertices.count(t) > 0; }
};

// Vertices = terminology, hyperedges one-to-one with the taxonomy edges.
BGraph build_bgraph(const Taxonomy& taxonomy);

// Taxonomy B-graph plus an edge ({TRUE}, u) for every u in the object's index.
BGraph object_graph(const Source& source, const ObjectId& o);

struct MarkStats {
    size_t edge_visits = 0;  // tail-counter decrements; linear in total edge size
    size_t marked = 0;
};

// True iff target is B-connected to TRUE. Forward marking: repeatedly fire
// any edge whose whole tail is marked. Order-independent.
bool b_connected(const BGraph& g, const Term& target, MarkStats* stats = nullptr);

// o in ans(t, source), decided on the object graph.
bool decide(const Source& source, const Term& t, const ObjectId& o);

// Graphviz rendering; hyperedges with |tail| > 1 get a junction node.
std::string to_dot(const BGraph& g, const std::string& name = "bgraph");

}  // namespace taxonet
