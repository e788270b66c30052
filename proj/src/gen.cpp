#include <algorithm>
#include <random>

#include "taxonet/gen.hpp"

namespace taxonet {

std::pair<Source, Term> gen_hitting(const Collection& c) {
    if (c.sets.empty()) throw MalformedTaxonomyError("collection must be non-empty");
    Source src;
    TermSet ground;
    for (const auto& set : c.sets) {
        if (set.empty()) throw MalformedTaxonomyError("collection sets must be non-empty");
        for (const auto& x : set) {
            if (has_reserved_prefix(x))
                throw UnknownTermError("reserved name in collection: " + x);
            ground.insert(Term(x));
        }
    }
    Term t("t");
    TermSet hubs;
    for (size_t j = 0; j < c.sets.size(); ++j) hubs.insert(Term("u" + std::to_string(j + 1)));
    if (ground.count(t))
        throw UnknownTermError("collection may not contain the query term 't'");
    for (const auto& u : hubs)
        if (ground.count(u)) throw UnknownTermError("collection may not contain '" + u.name + "'");

    src.taxonomy.terminology = ground;
    src.taxonomy.terminology.insert(t);
    src.taxonomy.terminology.insert(hubs.begin(), hubs.end());
    for (size_t j = 0; j < c.sets.size(); ++j) {
        Term uj("u" + std::to_string(j + 1));
        for (const auto& x : c.sets[j]) src.taxonomy.edges.insert(Hyperedge({Term(x)}, uj));
    }
    src.taxonomy.edges.insert(Hyperedge(hubs, t));
    return {std::move(src), t};
}

std::pair<Source, Term> gen_chain(int k) {
    if (k < 1) throw MalformedTaxonomyError("chain length must be positive");
    Source src;
    auto u = [](int i) { return Term("u" + std::to_string(i)); };
    auto v = [](int i) { return Term("v" + std::to_string(i)); };
    Term t("t");
    for (int i = 1; i <= k + 1; ++i) {
        src.taxonomy.terminology.insert(u(i));
        src.taxonomy.terminology.insert(v(i));
    }
    src.taxonomy.terminology.insert(t);
    for (int i = 1; i <= k; ++i) {
        src.taxonomy.edges.insert(Hyperedge({u(i), v(i)}, u(i + 1)));
        src.taxonomy.edges.insert(Hyperedge({u(i), v(i)}, v(i + 1)));
    }
    src.taxonomy.edges.insert(Hyperedge({u(k + 1), v(k + 1)}, t));
    return {std::move(src), t};
}

Network gen_random(uint64_t seed, const GenLimits& limits) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto chance = [&](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };

    int n_peers = pick(1, std::max(1, limits.max_peers));
    int n_terms = pick(n_peers, std::max(n_peers, limits.max_terms));

    Network net;
    std::vector<PeerId> ids;
    std::vector<std::vector<Term>> local_terms(n_peers);
    for (int i = 0; i < n_peers; ++i) {
        PeerId id = "P" + std::to_string(i);
        ids.push_back(id);
        ArticulatedSource peer;
        peer.peer_id = id;
        net.peers.emplace(id, std::move(peer));
    }
    for (int i = 0; i < n_terms; ++i) {
        int owner = (i < n_peers) ? i : pick(0, n_peers - 1);  // each peer gets one
        Term t = qualify(ids[owner], "x" + std::to_string(local_terms[owner].size()));
        local_terms[owner].push_back(t);
        net.peers[ids[owner]].source.taxonomy.terminology.insert(t);
    }

    int n_edges = pick(0, limits.max_edges);
    int attempts = n_edges * 4;
    int made = 0;
    while (made < n_edges && attempts-- > 0) {
        int hp = pick(0, n_peers - 1);
        const auto& locals = local_terms[hp];
        if (locals.empty()) continue;
        Term head = locals[pick(0, (int)locals.size() - 1)];
        bool articulation = n_peers > 1 && chance(0.35);
        TermSet tail;
        int want = pick(1, limits.max_tail);
        for (int i = 0; i < want * 3 && (int)tail.size() < want; ++i) {
            int tp = articulation ? pick(0, n_peers - 1) : hp;
            if (articulation && tp == hp) continue;
            const auto& pool = local_terms[tp];
            if (pool.empty()) continue;
            Term u = pool[pick(0, (int)pool.size() - 1)];
            if (u == head) continue;
            tail.insert(u);
        }
        if (tail.empty()) continue;
        Hyperedge e(tail, head);
        auto& peer = net.peers[ids[hp]];
        bool inserted =
            articulation ? peer.articulations.insert(e).second : peer.source.taxonomy.edges.insert(e).second;
        if (!inserted) continue;
        ++made;
        // cycles exercise the visited-set cuts
        if (!articulation && tail.size() == 1 && made < n_edges && chance(0.2)) {
            Hyperedge back({head}, *tail.begin());
            if (peer.source.taxonomy.edges.insert(back).second) ++made;
        }
    }

    int n_objects = pick(0, limits.max_objects);
    std::vector<Term> all;
    for (const auto& v : local_terms) all.insert(all.end(), v.begin(), v.end());
    for (int i = 0; i < n_objects; ++i) {
        ObjectId o("o" + std::to_string(i));
        int memberships = pick(0, 3);
        for (int j = 0; j < memberships && !all.empty(); ++j) {
            const Term& t = all[pick(0, (int)all.size() - 1)];
            net.peers[t.peer()].source.interpretation.add(t, o);
        }
    }
    return net;
}

}  // namespace taxonet
