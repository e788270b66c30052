#include <fstream>
#include <sstream>

#include <json.hpp>

#include "taxonet/io.hpp"

namespace taxonet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw SchemaError(where + ": expected strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

RawEdge parse_edge(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("tail") || !j.contains("head"))
        throw SchemaError(where + ": edge needs tail and head");
    RawEdge e;
    e.tail = string_list(j.at("tail"), where + ".tail");
    if (!j.at("head").is_string()) throw SchemaError(where + ".head: expected a string");
    e.head = j.at("head").get<std::string>();
    return e;
}

}  // namespace

RawNetwork parse_raw_network(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("peers"))
        throw SchemaError("top level: expected an object with a \"peers\" array");

    RawNetwork raw;
    if (doc.contains("universe")) raw.universe = string_list(doc.at("universe"), "universe");

    const json& peers = doc.at("peers");
    if (!peers.is_array()) throw SchemaError("peers: expected an array");
    for (size_t i = 0; i < peers.size(); ++i) {
        const json& pj = peers[i];
        std::string where = "peers[" + std::to_string(i) + "]";
        if (!pj.is_object() || !pj.contains("id") || !pj.at("id").is_string())
            throw SchemaError(where + ": peer needs a string id");
        RawPeer p;
        p.id = pj.at("id").get<std::string>();
        if (pj.contains("terms")) p.terms = string_list(pj.at("terms"), where + ".terms");
        if (pj.contains("edges")) {
            if (!pj.at("edges").is_array()) throw SchemaError(where + ".edges: expected an array");
            size_t k = 0;
            for (const auto& ej : pj.at("edges"))
                p.edges.push_back(parse_edge(ej, where + ".edges[" + std::to_string(k++) + "]"));
        }
        if (pj.contains("articulations")) {
            if (!pj.at("articulations").is_array())
                throw SchemaError(where + ".articulations: expected an array");
            size_t k = 0;
            for (const auto& ej : pj.at("articulations"))
                p.articulations.push_back(
                    parse_edge(ej, where + ".articulations[" + std::to_string(k++) + "]"));
        }
        if (pj.contains("interp")) {
            const json& ij = pj.at("interp");
            if (!ij.is_object()) throw SchemaError(where + ".interp: expected an object");
            for (auto it = ij.begin(); it != ij.end(); ++it)
                p.interp[it.key()] = string_list(it.value(), where + ".interp." + it.key());
        }
        raw.peers.push_back(std::move(p));
    }
    return raw;
}

RawNetwork load_raw_network(const std::string& path) {
    return parse_raw_network(read_file(path));
}

LoadResult load_network_from_text(const std::string& text) {
    RawNetwork raw = parse_raw_network(text);
    auto violations = validate(raw);
    if (has_errors(violations)) {
        std::string msg = "invalid network:";
        for (const auto& v : violations) msg += "\n  " + v.format();
        throw SchemaError(msg);
    }
    LoadResult result;
    result.network = build_network(raw);
    for (auto& v : violations) result.warnings.push_back(std::move(v));
    for (const auto& o : raw.universe) result.universe.insert(ObjectId(o));
    result.has_universe = !raw.universe.empty();
    return result;
}

LoadResult load_network(const std::string& path) {
    return load_network_from_text(read_file(path));
}

std::string dump_network(const Network& network, const std::optional<ObjSet>& universe) {
    ordered_json doc = ordered_json::object();
    if (universe && !universe->empty()) {
        ordered_json u = ordered_json::array();
        for (const auto& o : *universe) u.push_back(o.id);
        doc["universe"] = std::move(u);
    }
    ordered_json peers = ordered_json::array();
    for (const auto& [id, peer] : network.peers) {  // map order = sorted ids
        ordered_json pj = ordered_json::object();
        pj["id"] = id;
        ordered_json terms = ordered_json::array();
        for (const auto& t : peer.source.terminology()) terms.push_back(t.local());
        pj["terms"] = std::move(terms);
        if (!peer.source.edges().empty()) {
            ordered_json edges = ordered_json::array();
            for (const auto& e : peer.source.edges()) {
                ordered_json ej = ordered_json::object();
                ordered_json tail = ordered_json::array();
                for (const auto& u : e.tail) tail.push_back(u.local());
                ej["tail"] = std::move(tail);
                ej["head"] = e.head.local();
                edges.push_back(std::move(ej));
            }
            pj["edges"] = std::move(edges);
        }
        ordered_json interp = ordered_json::object();
        for (const auto& [t, objs] : peer.source.interpretation.assignment) {
            if (objs.empty()) continue;
            ordered_json list = ordered_json::array();
            for (const auto& o : objs) list.push_back(o.id);
            interp[t.local()] = std::move(list);
        }
        if (!interp.empty()) pj["interp"] = std::move(interp);
        if (!peer.articulations.empty()) {
            ordered_json artics = ordered_json::array();
            for (const auto& e : peer.articulations) {
                ordered_json ej = ordered_json::object();
                ordered_json tail = ordered_json::array();
                for (const auto& u : e.tail) tail.push_back(u.name);  // qualified
                ej["tail"] = std::move(tail);
                ej["head"] = e.head.local();
                artics.push_back(std::move(ej));
            }
            pj["articulations"] = std::move(artics);
        }
        peers.push_back(std::move(pj));
    }
    doc["peers"] = std::move(peers);
    return doc.dump(2) + "\n";
}

Source to_single_source(const Network& network) {
    if (network.peers.size() != 1)
        throw SchemaError("expected a single-peer file, got " +
                          std::to_string(network.peers.size()) + " peers");
    const ArticulatedSource& peer = network.peers.begin()->second;
    if (!peer.articulations.empty())
        throw SchemaError("single-source file may not have articulations");
    Source out;
    for (const auto& t : peer.source.terminology())
        out.taxonomy.terminology.insert(Term(t.local()));
    for (const auto& e : peer.source.edges()) {
        TermSet tail;
        for (const auto& u : e.tail) tail.insert(Term(u.local()));
        out.taxonomy.edges.insert(Hyperedge(std::move(tail), Term(e.head.local())));
    }
    for (const auto& [t, objs] : peer.source.interpretation.assignment)
        for (const auto& o : objs) out.interpretation.add(Term(t.local()), o);
    return out;
}

}  // namespace taxonet
