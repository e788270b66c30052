#include <json.hpp>

#include "taxonet/net/message.hpp"

namespace taxonet::net {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(Flag f) { return f == Flag::full ? "full" : "partial"; }

QueryId QueryId::parse(const std::string& text) {
    auto hash = text.rfind('#');
    if (hash == std::string::npos || hash == 0 || hash + 1 == text.size())
        throw DecodeError("bad query id: " + text);
    QueryId id;
    id.origin = text.substr(0, hash);
    try {
        id.counter = std::stoull(text.substr(hash + 1));
    } catch (const std::exception&) {
        throw DecodeError("bad query id counter: " + text);
    }
    return id;
}

std::string encode(const AskMsg& m) {
    ordered_json j;
    j["type"] = "ask";
    j["pid"] = m.pid;
    j["qid"] = m.qid.str();
    j["t"] = m.t.name;
    ordered_json visited = ordered_json::array();
    for (const auto& v : m.visited) visited.push_back(v.name);
    j["visited"] = std::move(visited);
    return j.dump();
}

std::string encode(const TellMsg& m) {
    ordered_json j;
    j["type"] = "tell";
    j["qid"] = m.qid.str();
    ordered_json res = ordered_json::array();
    for (const auto& o : m.res) res.push_back(o.id);
    j["res"] = std::move(res);
    if (m.t) j["t"] = m.t->name;
    if (m.flag) j["flag"] = to_string(*m.flag);
    return j.dump();
}

namespace {

std::string need_string(const json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_string())
        throw DecodeError(std::string("missing or non-string field: ") + field);
    return j.at(field).get<std::string>();
}

}  // namespace

DecodedMessage decode(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw DecodeError(std::string("invalid message line: ") + e.what());
    }
    if (!j.is_object()) throw DecodeError("message must be a JSON object");
    std::string type = need_string(j, "type");
    DecodedMessage out;
    if (type == "ask") {
        AskMsg m;
        m.pid = need_string(j, "pid");
        m.qid = QueryId::parse(need_string(j, "qid"));
        m.t = Term(need_string(j, "t"));
        if (!j.contains("visited") || !j.at("visited").is_array())
            throw DecodeError("ask needs a visited array");
        for (const auto& v : j.at("visited")) {
            if (!v.is_string()) throw DecodeError("visited entries must be strings");
            m.visited.insert(Term(v.get<std::string>()));
        }
        if (!m.visited.count(m.t)) throw DecodeError("ask term missing from visited set");
        out.ask = std::move(m);
    } else if (type == "tell") {
        TellMsg m;
        m.qid = QueryId::parse(need_string(j, "qid"));
        if (!j.contains("res") || !j.at("res").is_array())
            throw DecodeError("tell needs a res array");
        for (const auto& o : j.at("res")) {
            if (!o.is_string()) throw DecodeError("res entries must be strings");
            m.res.insert(ObjectId(o.get<std::string>()));
        }
        if (j.contains("t")) m.t = Term(need_string(j, "t"));
        if (j.contains("flag")) {
            std::string f = need_string(j, "flag");
            if (f == "full")
                m.flag = Flag::full;
            else if (f == "partial")
                m.flag = Flag::partial;
            else
                throw DecodeError("bad flag value: " + f);
        }
        out.tell = std::move(m);
    } else {
        throw DecodeError("unknown message type: " + type);
    }
    return out;
}

}  // namespace taxonet::net
