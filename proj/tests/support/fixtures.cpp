#include "support/fixtures.hpp"

namespace taxonet::fixtures {

Term T(const std::string& name) { return Term(name); }
ObjectId O(const std::string& id) { return ObjectId(id); }

TermSet terms(std::initializer_list<std::string> names) {
    TermSet out;
    for (const auto& n : names) out.insert(Term(n));
    return out;
}

ObjSet objects(std::initializer_list<std::string> ids) {
    ObjSet out;
    for (const auto& i : ids) out.insert(ObjectId(i));
    return out;
}

Source star_source() {
    Source s;
    s.taxonomy.terminology = terms({"a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"});
    s.taxonomy.edges = {
        Hyperedge(terms({"a2"}), T("a1")),      Hyperedge(terms({"a3"}), T("a1")),
        Hyperedge(terms({"b3"}), T("a2")),      Hyperedge(terms({"b1", "b2"}), T("a2")),
        Hyperedge(terms({"c1"}), T("b1")),      Hyperedge(terms({"c2"}), T("b1")),
        Hyperedge(terms({"c2", "c3"}), T("b2")), Hyperedge(terms({"b1", "b3"}), T("c2")),
    };
    return s;
}

Source star_source_with_objects() {
    Source s = star_source();
    s.interpretation.add(T("c1"), O("o1"));
    s.interpretation.add(T("c2"), O("o2"));
    s.interpretation.add(T("c3"), O("o3"));
    s.interpretation.add(T("b3"), O("o4"));
    return s;
}

Network star_network() {
    Network net;

    ArticulatedSource pa;
    pa.peer_id = "Pa";
    pa.source.taxonomy.terminology = terms({"Pa:a1", "Pa:a2", "Pa:a3"});
    pa.source.taxonomy.edges = {
        Hyperedge(terms({"Pa:a2"}), T("Pa:a1")),
        Hyperedge(terms({"Pa:a3"}), T("Pa:a1")),
    };
    pa.articulations = {
        Hyperedge(terms({"Pb:b3"}), T("Pa:a2")),
        Hyperedge(terms({"Pb:b1", "Pb:b2"}), T("Pa:a2")),
    };
    net.peers.emplace("Pa", std::move(pa));

    ArticulatedSource pb;
    pb.peer_id = "Pb";
    pb.source.taxonomy.terminology = terms({"Pb:b1", "Pb:b2", "Pb:b3"});
    pb.articulations = {
        Hyperedge(terms({"Pc:c1"}), T("Pb:b1")),
        Hyperedge(terms({"Pc:c2"}), T("Pb:b1")),
        Hyperedge(terms({"Pc:c2", "Pc:c3"}), T("Pb:b2")),
    };
    net.peers.emplace("Pb", std::move(pb));

    ArticulatedSource pc;
    pc.peer_id = "Pc";
    pc.source.taxonomy.terminology = terms({"Pc:c1", "Pc:c2", "Pc:c3"});
    pc.articulations = {
        Hyperedge(terms({"Pb:b1", "Pb:b3"}), T("Pc:c2")),
    };
    net.peers.emplace("Pc", std::move(pc));

    return net;
}

Network star_network_with(const std::map<std::string, std::vector<std::string>>& interp) {
    Network net = star_network();
    for (const auto& [name, objs] : interp) {
        Term t(name);
        auto& peer = net.peers.at(t.peer());
        for (const auto& o : objs) peer.source.interpretation.add(t, ObjectId(o));
    }
    return net;
}

Network star_network_with_objects() {
    return star_network_with({{"Pc:c1", {"o1"}},
                              {"Pc:c2", {"o2"}},
                              {"Pc:c3", {"o3"}},
                              {"Pb:b3", {"o4"}}});
}

Source intro_source() {
    Source s;
    s.taxonomy.terminology =
        terms({"Penguin", "Pelican", "Ostrich", "Animal", "FlyingObject", "Bird"});
    s.taxonomy.edges = {
        Hyperedge(terms({"Penguin"}), T("Animal")),
        Hyperedge(terms({"Pelican"}), T("Animal")),
        Hyperedge(terms({"Ostrich"}), T("Animal")),
        Hyperedge(terms({"Animal", "FlyingObject"}), T("Bird")),
        Hyperedge(terms({"Penguin"}), T("Bird")),
        Hyperedge(terms({"Ostrich"}), T("Bird")),
    };
    s.interpretation.add(T("Ostrich"), O("1"));
    s.interpretation.add(T("Bird"), O("2"));
    s.interpretation.add(T("Animal"), O("3"));
    s.interpretation.add(T("FlyingObject"), O("3"));
    return s;
}

}  // namespace taxonet::fixtures
