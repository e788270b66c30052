#include <map>
#include <sstream>
#include <vector>

#include "taxonet/bgraph.hpp"

namespace taxonet {

BGraph build_bgraph(const Taxonomy& taxonomy) {
    BGraph g;
    g.vertices = taxonomy.terminology;
    g.vertices.insert(kTrue);
    g.edges = taxonomy.edges;
    return g;
}

BGraph object_graph(const Source& source, const ObjectId& o) {
    BGraph g = build_bgraph(source.taxonomy);
    for (const auto& u : index_of(source, o)) g.edges.insert(Hyperedge({kTrue}, u));
    return g;
}

bool b_connected(const BGraph& g, const Term& target, MarkStats* stats) {
    if (!g.has_vertex(target)) throw UnknownTermError("unknown vertex: " + target.name);
    if (target == kTrue) return true;

    // Linear forward marking: per-edge counters of unmarked tail vertices;
    // an edge fires when its counter reaches zero.
    std::vector<const Hyperedge*> edges;
    std::vector<size_t> unmarked;
    std::map<Term, std::vector<size_t>> edges_by_tail;
    edges.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        size_t idx = edges.size();
        edges.push_back(&e);
        unmarked.push_back(e.tail.size());
        for (const auto& u : e.tail) edges_by_tail[u].push_back(idx);
    }

    TermSet marked;
    std::vector<Term> frontier{kTrue};
    marked.insert(kTrue);
    while (!frontier.empty()) {
        Term v = std::move(frontier.back());
        frontier.pop_back();
        if (v == target) break;
        auto it = edges_by_tail.find(v);
        if (it == edges_by_tail.end()) continue;
        for (size_t idx : it->second) {
            if (stats) ++stats->edge_visits;
            if (--unmarked[idx] == 0) {
                const Term& head = edges[idx]->head;
                if (marked.insert(head).second) frontier.push_back(head);
            }
        }
    }
    if (stats) stats->marked = marked.size();
    return marked.count(target) > 0;
}

bool decide(const Source& source, const Term& t, const ObjectId& o) {
    if (!source.has_term(t)) throw UnknownTermError("unknown term: " + t.name);
    return b_connected(object_graph(source, o), t);
}

std::string to_dot(const BGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (const auto& v : g.vertices) os << "  \"" << v.name << "\";\n";
    size_t junction = 0;
    for (const auto& e : g.edges) {
        if (e.tail.size() == 1) {
            os << "  \"" << e.tail.begin()->name << "\" -> \"" << e.head.name << "\";\n";
        } else {
            std::string j = "j" + std::to_string(junction++);
            os << "  \"" << j << "\" [shape=point];\n";
            for (const auto& u : e.tail) os << "  \"" << u.name << "\" -> \"" << j << "\";\n";
            os << "  \"" << j << "\" -> \"" << e.head.name << "\";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace taxonet
