#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "taxonet/bgraph.hpp"
#include "taxonet/datalog.hpp"
#include "taxonet/eval.hpp"
#include "taxonet/gen.hpp"
#include "taxonet/io.hpp"
#include "taxonet/net/simulator.hpp"
#include "taxonet/parser.hpp"

using namespace taxonet;

namespace {

std::string join_objects(const ObjSet& objs) {
    std::string out;
    for (const auto& o : objs) {
        if (!out.empty()) out += " ";
        out += o.id;
    }
    return out;
}

std::string join_terms(const TermSet& ts) {
    std::string out = "{";
    for (const auto& t : ts) {
        if (out.size() > 1) out += ",";
        out += t.name;
    }
    return out + "}";
}

ObjSet parse_object_list(const std::string& csv) {
    ObjSet out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(ObjectId(item));
    return out;
}

// user query text in a peer's language, qualified against the network
Query qualified_query(const std::string& text, const PeerId& peer) {
    Query raw = parse_query(text);
    std::vector<Conjunction> disjuncts;
    for (const auto& d : raw.disjuncts) {
        TermSet ts;
        for (const auto& t : d.terms) ts.insert(qualify(peer, t.name));
        disjuncts.push_back(Conjunction(std::move(ts)));
    }
    return Query(std::move(disjuncts));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path);
    out << text;
}

uint64_t effective_seed(uint64_t from_flag) {
    if (const char* env = std::getenv("TAXONET_SEED")) return std::stoull(env);
    return from_flag;
}

Network single_peer_network(const Source& src, const std::string& peer_id) {
    Network net;
    ArticulatedSource p;
    p.peer_id = peer_id;
    for (const auto& t : src.terminology())
        p.source.taxonomy.terminology.insert(qualify(peer_id, t.name));
    for (const auto& e : src.edges()) {
        TermSet tail;
        for (const auto& u : e.tail) tail.insert(qualify(peer_id, u.name));
        p.source.taxonomy.edges.insert(
            Hyperedge(std::move(tail), qualify(peer_id, e.head.name)));
    }
    for (const auto& [t, objs] : src.interpretation.assignment)
        for (const auto& o : objs) p.source.interpretation.add(qualify(peer_id, t.name), o);
    net.peers.emplace(peer_id, std::move(p));
    return net;
}

int run_validate(const std::string& path) {
    RawNetwork raw = load_raw_network(path);
    auto violations = validate(raw);
    for (const auto& v : violations) std::cerr << v.format() << "\n";
    if (has_errors(violations)) return 1;
    std::cout << "ok\n";
    return 0;
}

int run_eval(const std::string& path, const std::string& query_text, bool neg,
             const std::string& universe_csv, const std::string& peer, bool trace) {
    LoadResult loaded = load_network(path);
    for (const auto& w : loaded.warnings) std::cerr << w.format() << "\n";

    bool single = loaded.network.peers.size() == 1 &&
                  loaded.network.peers.begin()->second.articulations.empty() && peer.empty();
    Source source = single ? to_single_source(loaded.network) : flatten(loaded.network);
    if (!single && peer.empty())
        throw SchemaError("network files need --peer to anchor the query language");

    if (neg) {
        NegQuery q = parse_neg_query(query_text);
        if (!peer.empty()) {
            NegQuery qualified;
            qualified.contradiction_warning = q.contradiction_warning;
            for (const auto& d : q.disjuncts) {
                NegDisjunct nd;
                for (const auto& t : d.positive) nd.positive.insert(qualify(peer, t.name));
                for (const auto& t : d.negative) nd.negative.insert(qualify(peer, t.name));
                qualified.disjuncts.push_back(std::move(nd));
            }
            q = std::move(qualified);
        }
        if (q.contradiction_warning)
            std::cerr << "warning: a disjunct contains a term and its negation\n";
        std::optional<ObjSet> universe;
        if (!universe_csv.empty())
            universe = parse_object_list(universe_csv);
        else if (loaded.has_universe)
            universe = loaded.universe;
        else if (!single)
            throw SchemaError(
                "negation over a network needs an explicit universe "
                "(--universe or a \"universe\" file key)");
        std::cout << join_objects(extended_answer(source, q, universe)) << "\n";
        return 0;
    }

    Query q = peer.empty() ? parse_query(query_text) : qualified_query(query_text, peer);
    if (trace) {
        auto [embedded, root] = embed_query(source, q);
        CallTrace calls;
        ObjSet result = answer_term(embedded, root, {root}, &calls);
        std::cout << calls.dump();
        std::cout << join_objects(result) << "\n";
    } else {
        std::cout << join_objects(answer(source, q)) << "\n";
    }
    return 0;
}

int run_netsim(const std::string& path, const std::string& peer, const std::string& query_text,
               const std::string& cache_mode, uint64_t seed, bool random_sched, bool trace,
               size_t budget, std::optional<size_t> capacity) {
    LoadResult loaded = load_network(path);
    for (const auto& w : loaded.warnings) std::cerr << w.format() << "\n";
    if (!loaded.network.peers.count(peer)) {
        std::cerr << "no such peer: " << peer << "\n";
        return 1;
    }
    auto policy = net::parse_cache_policy(cache_mode);
    if (!policy) {
        std::cerr << "unknown cache mode: " << cache_mode << "\n";
        return 2;
    }
    net::SchedulerConfig sched;
    if (random_sched) {
        sched.kind = net::SchedulerKind::random;
        sched.seed = effective_seed(seed);
    }
    net::Simulator sim(loaded.network, *policy, sched, capacity);
    if (trace) {
        sim.set_trace([](const net::TraceEvent& ev) {
            if (const auto* ask = std::get_if<net::AskMsg>(&ev.envelope.payload)) {
                std::cout << ev.dest << " <- ask " << ask->qid.str() << " t=" << ask->t.name
                          << " visited=" << join_terms(ask->visited) << " from=" << ask->pid
                          << "\n";
            } else if (const auto* tell = std::get_if<net::TellMsg>(&ev.envelope.payload)) {
                std::cout << ev.dest << " <- tell " << tell->qid.str() << " res={"
                          << join_objects(tell->res) << "}";
                if (tell->t) std::cout << " t=" << tell->t->name;
                if (tell->flag) std::cout << " flag=" << net::to_string(*tell->flag);
                std::cout << "\n";
            } else if (const auto* fwd = std::get_if<net::SeedMsg>(&ev.envelope.payload)) {
                std::cout << ev.dest << " <- seed " << join_terms(fwd->key) << " res={"
                          << join_objects(fwd->objs) << "}\n";
            }
        });
    }
    auto [result, stats] = sim.run_query(peer, parse_query(query_text), budget);
    std::cout << join_objects(result) << "\n";
    std::cout << "asks=" << stats.asks << " tells=" << stats.tells
              << " forwards=" << stats.forwards << " cache_hits=" << stats.cache_hits
              << " cache_misses=" << stats.cache_misses
              << " interpeer_asks=" << stats.interpeer_asks
              << " interpeer_tells=" << stats.interpeer_tells
              << " log_peak=" << stats.log_objects_peak << "\n";
    return 0;
}

int run_check(const std::string& path, bool exhaustive, int random_count, uint64_t seed) {
    LoadResult loaded = load_network(path);
    Source flat = flatten(loaded.network);
    MinimalModel mm = minimal_model(flat);

    std::vector<std::pair<PeerId, Term>> targets;
    for (const auto& [id, peer] : loaded.network.peers)
        for (const auto& t : peer.source.terminology()) targets.push_back({id, t});
    if (!exhaustive && random_count > 0 && !targets.empty()) {
        std::mt19937_64 rng(effective_seed(seed));
        std::vector<std::pair<PeerId, Term>> sampled;
        std::uniform_int_distribution<size_t> pick(0, targets.size() - 1);
        for (int i = 0; i < random_count; ++i) sampled.push_back(targets[pick(rng)]);
        targets = std::move(sampled);
    }

    bool all_ok = true;
    for (const auto& [peer_id, t] : targets) {
        ObjSet via_qe = answer_term(flat, t, {t});
        ObjSet via_mm = mm(t);
        ObjSet via_dl = query_answers(naive_eval(to_datalog(flat, Query::single(t))));
        net::Simulator sim(loaded.network);
        auto [via_net, stats] = sim.run_query(peer_id, Query::single(t));
        size_t calls = answer_call_count(flat, Query::single(t));

        bool ok = via_qe == via_mm && via_qe == via_dl && via_qe == via_net &&
                  stats.asks == calls && stats.tells == calls;
        all_ok = all_ok && ok;
        if (ok) {
            std::cout << "PASS " << t.name << "\n";
        } else {
            std::cout << "FAIL " << t.name << " qe={" << join_objects(via_qe) << "} mm={"
                      << join_objects(via_mm) << "} datalog={" << join_objects(via_dl)
                      << "} netsim={" << join_objects(via_net) << "} asks=" << stats.asks
                      << " tells=" << stats.tells << " qe_calls=" << calls << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

Collection parse_sets(const std::string& text) {
    Collection c;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<std::string> set;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ','))
            if (!item.empty()) set.push_back(item);
        if (!set.empty()) c.sets.push_back(std::move(set));
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"taxonomy network query evaluator"};
    app.require_subcommand(1);

    std::string v_file;
    auto* validate_cmd = app.add_subcommand("validate", "check a network file");
    validate_cmd->add_option("file", v_file)->required();

    std::string e_file, e_query, e_universe, e_peer;
    bool e_neg = false, e_trace = false;
    auto* eval_cmd = app.add_subcommand("eval", "centralized evaluation");
    eval_cmd->add_option("file", e_file)->required();
    eval_cmd->add_option("-q,--query", e_query)->required();
    eval_cmd->add_flag("--neg", e_neg, "query may use ! literals");
    eval_cmd->add_option("--universe", e_universe, "comma-separated object universe");
    eval_cmd->add_option("--peer", e_peer, "qualify bare terms by this peer");
    eval_cmd->add_flag("--trace", e_trace, "print the evaluation call trace");

    std::string n_file, n_peer, n_query, n_cache = "none";
    uint64_t n_seed = 0;
    bool n_trace = false;
    size_t n_budget = 1'000'000;
    long long n_capacity = -1;
    auto* netsim_cmd = app.add_subcommand("netsim", "distributed evaluation");
    netsim_cmd->add_option("file", n_file)->required();
    netsim_cmd->add_option("--peer", n_peer)->required();
    netsim_cmd->add_option("-q,--query", n_query)->required();
    netsim_cmd->add_option("--cache", n_cache, "none|local|push|push-ext|heads");
    netsim_cmd->add_option("--cache-capacity", n_capacity, "bound cache entries (LRU)");
    auto* seed_opt = netsim_cmd->add_option("--seed", n_seed, "seeded random scheduler");
    netsim_cmd->add_flag("--trace", n_trace, "print one line per delivery");
    netsim_cmd->add_option("--budget", n_budget, "message budget");

    std::string c_file;
    bool c_exhaustive = false;
    int c_random = 0;
    uint64_t c_seed = 0;
    auto* check_cmd = app.add_subcommand("check", "cross-check every evaluation route");
    check_cmd->add_option("file", c_file)->required();
    check_cmd->add_flag("--exhaustive", c_exhaustive, "every term at its owning peer");
    check_cmd->add_option("--random", c_random, "number of sampled terms");
    check_cmd->add_option("--seed", c_seed, "sampling seed");

    auto* gen_cmd = app.add_subcommand("gen", "write generated instances");
    gen_cmd->require_subcommand(1);
    std::string gh_sets, gh_out;
    auto* gen_hitting_cmd = gen_cmd->add_subcommand("hitting", "hitting-set instance");
    gen_hitting_cmd->add_option("--sets", gh_sets, "e.g. \"a,b;b,c,d;b,c,e,f\"")->required();
    gen_hitting_cmd->add_option("-o,--out", gh_out);
    int gc_k = 4;
    std::string gc_out;
    auto* gen_chain_cmd = gen_cmd->add_subcommand("chain", "exponential-path ladder");
    gen_chain_cmd->add_option("--k", gc_k)->required();
    gen_chain_cmd->add_option("-o,--out", gc_out);
    uint64_t gr_seed = 1;
    std::string gr_out;
    GenLimits gr_limits;
    auto* gen_random_cmd = gen_cmd->add_subcommand("random", "seeded random network");
    gen_random_cmd->add_option("--seed", gr_seed)->required();
    gen_random_cmd->add_option("--peers", gr_limits.max_peers);
    gen_random_cmd->add_option("--terms", gr_limits.max_terms);
    gen_random_cmd->add_option("--edges", gr_limits.max_edges);
    gen_random_cmd->add_option("--tail", gr_limits.max_tail);
    gen_random_cmd->add_option("--objects", gr_limits.max_objects);
    gen_random_cmd->add_option("-o,--out", gr_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) return run_validate(v_file);
        if (*eval_cmd) return run_eval(e_file, e_query, e_neg, e_universe, e_peer, e_trace);
        if (*netsim_cmd) {
            std::optional<size_t> cap;
            if (n_capacity >= 0) cap = (size_t)n_capacity;
            bool random_sched = seed_opt->count() > 0 || std::getenv("TAXONET_SEED") != nullptr;
            return run_netsim(n_file, n_peer, n_query, n_cache, n_seed, random_sched, n_trace,
                              n_budget, cap);
        }
        if (*check_cmd)
            return run_check(c_file, c_exhaustive || c_random == 0, c_random, c_seed);
        if (*gen_cmd) {
            if (*gen_hitting_cmd) {
                auto [src, t] = gen_hitting(parse_sets(gh_sets));
                write_output(gh_out, dump_network(single_peer_network(src, "S")));
            } else if (*gen_chain_cmd) {
                auto [src, t] = gen_chain(gc_k);
                write_output(gc_out, dump_network(single_peer_network(src, "S")));
            } else if (*gen_random_cmd) {
                write_output(gr_out, dump_network(gen_random(effective_seed(gr_seed), gr_limits)));
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "query error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
