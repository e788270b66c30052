#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace taxonet {

// A term of some terminology. In a network, names are qualified as
// "peer:name"; in a standalone source they are bare tokens.
struct Term {
    std::string name;

    Term() = default;
    explicit Term(std::string n) : name(std::move(n)) {}

    // Peer prefix of a qualified name, empty for bare names.
    std::string peer() const {
        auto pos = name.find(':');
        return pos == std::string::npos ? std::string{} : name.substr(0, pos);
    }
    // Name without the peer prefix.
    std::string local() const {
        auto pos = name.find(':');
        return pos == std::string::npos ? name : name.substr(pos + 1);
    }
    bool qualified() const { return name.find(':') != std::string::npos; }

    bool operator==(const Term& o) const { return name == o.name; }
    bool operator!=(const Term& o) const { return name != o.name; }
    bool operator<(const Term& o) const { return name < o.name; }
};

inline Term qualify(const std::string& peer, const std::string& local) {
    return Term(peer + ":" + local);
}

// Opaque object identifier, shared network-wide.
struct ObjectId {
    std::string id;

    ObjectId() = default;
    explicit ObjectId(std::string i) : id(std::move(i)) {}

    bool operator==(const ObjectId& o) const { return id == o.id; }
    bool operator!=(const ObjectId& o) const { return id != o.id; }
    bool operator<(const ObjectId& o) const { return id < o.id; }
};

using TermSet = std::set<Term>;
using ObjSet = std::set<ObjectId>;

// Reserved prefix for machine-generated terms; user input may not use it.
inline constexpr const char* kReservedPrefix = "__";

inline bool has_reserved_prefix(const std::string& name) {
    return name.rfind(kReservedPrefix, 0) == 0;
}

struct UnknownTermError : std::runtime_error {
    explicit UnknownTermError(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedTaxonomyError : std::runtime_error {
    explicit MalformedTaxonomyError(const std::string& what) : std::runtime_error(what) {}
};

struct IllegalStateError : std::logic_error {
    explicit IllegalStateError(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

struct DivergedError : std::runtime_error {
    explicit DivergedError(const std::string& what) : std::runtime_error(what) {}
};

struct UnstratifiableError : std::runtime_error {
    explicit UnstratifiableError(const std::string& what) : std::runtime_error(what) {}
};

// Set helpers used all over the evaluation code.
template <typename T>
std::set<T> set_union(const std::set<T>& a, const std::set<T>& b) {
    std::set<T> r = a;
    r.insert(b.begin(), b.end());
    return r;
}

template <typename T>
std::set<T> set_intersect(const std::set<T>& a, const std::set<T>& b) {
    std::set<T> r;
    for (const auto& x : a)
        if (b.count(x)) r.insert(x);
    return r;
}

template <typename T>
std::set<T> set_minus(const std::set<T>& a, const std::set<T>& b) {
    std::set<T> r;
    for (const auto& x : a)
        if (!b.count(x)) r.insert(x);
    return r;
}

template <typename T>
bool disjoint(const std::set<T>& a, const std::set<T>& b) {
    for (const auto& x : a)
        if (b.count(x)) return false;
    return true;
}

}  // namespace taxonet
