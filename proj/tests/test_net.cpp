#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "support/fixtures.hpp"
#include "taxonet/eval.hpp"
#include "taxonet/gen.hpp"
#include "taxonet/net/simulator.hpp"
#include "taxonet/parser.hpp"

using namespace taxonet;
using namespace taxonet::net;
using namespace taxonet::fixtures;

TEST_CASE("query ids render and parse") {
    QueryId id{"Pa", 7};
    CHECK(id.str() == "Pa#7");
    CHECK(QueryId::parse("Pa#7") == id);
    CHECK_THROWS_AS(QueryId::parse("Pa"), DecodeError);
    CHECK_THROWS_AS(QueryId::parse("#1"), DecodeError);
    CHECK_THROWS_AS(QueryId::parse("Pa#"), DecodeError);
}

TEST_CASE("wire encoding round-trips and tolerates optional fields") {
    AskMsg ask{"Pa", {"Pa", 1}, Term("Pa:__q0"), terms({"Pa:__q0"})};
    std::string line = encode(ask);
    CHECK(line ==
          R"({"type":"ask","pid":"Pa","qid":"Pa#1","t":"Pa:__q0","visited":["Pa:__q0"]})");
    DecodedMessage d = decode(line);
    REQUIRE(d.ask.has_value());
    CHECK(*d.ask == ask);

    TellMsg plain{{"Pb", 3}, objects({"o1", "o2"}), std::nullopt, std::nullopt};
    auto d2 = decode(encode(plain));
    REQUIRE(d2.tell.has_value());
    CHECK(*d2.tell == plain);

    TellMsg tagged{{"Pb", 3}, objects({"o1"}), Term("Pb:b1"), Flag::partial};
    auto d3 = decode(encode(tagged));
    REQUIRE(d3.tell.has_value());
    CHECK(*d3.tell == tagged);

    CHECK_THROWS_AS(decode(R"({"type":"ask","pid":"Pa")"), DecodeError);
    CHECK_THROWS_AS(decode(R"({"type":"nope"})"), DecodeError);
    CHECK_THROWS_AS(decode(R"({"type":"ask","pid":"Pa","qid":"Pa#1","t":"x","visited":["y"]})"),
                    DecodeError);
}

TEST_CASE("random messages survive the wire") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> small(0, 4);
    for (int i = 0; i < 1000; ++i) {
        if (small(rng) % 2 == 0) {
            AskMsg m{"P" + std::to_string(small(rng)),
                     {"P" + std::to_string(small(rng)), (uint64_t)small(rng)},
                     Term("P:t" + std::to_string(small(rng))),
                     {}};
            m.visited.insert(m.t);
            for (int k = small(rng); k > 0; --k)
                m.visited.insert(Term("P:v" + std::to_string(k)));
            auto d = decode(encode(m));
            REQUIRE(d.ask.has_value());
            CHECK(*d.ask == m);
        } else {
            TellMsg m{{"P" + std::to_string(small(rng)), (uint64_t)small(rng)}, {}, {}, {}};
            for (int k = small(rng); k > 0; --k) m.res.insert(O("o" + std::to_string(k)));
            if (small(rng) % 2) m.t = Term("P:t1");
            if (small(rng) % 2) m.flag = small(rng) % 2 ? Flag::full : Flag::partial;
            auto d = decode(encode(m));
            REQUIRE(d.tell.has_value());
            CHECK(*d.tell == m);
        }
    }
}

TEST_CASE("compute_answer unions intersections") {
    QueryProgram qp = {{Call::closed(objects({"a", "b"}))},
                       {Call::closed(objects({"b", "c"})), Call::closed(objects({"c", "d"}))}};
    CHECK(compute_answer(qp) == objects({"a", "b", "c"}));
    CHECK(compute_answer({{Call::closed({})}}).empty());
    CHECK_THROWS_AS(compute_answer({{Call::open({"P", 1})}}), IllegalStateError);
    // one sub-program with two closed calls intersects them
    QueryProgram q9 = {{Call::closed(objects({"x", "y"})), Call::closed(objects({"y", "z"}))}};
    CHECK(compute_answer(q9) == objects({"y"}));
}

TEST_CASE("the reference run: thirteen asks, thirteen tells") {
    Network net = star_network_with_objects();
    Simulator sim(net);
    auto [result, stats] = sim.run_query("Pa", parse_query("a2 & a3"));

    CHECK(stats.asks == 13);
    CHECK(stats.tells == 13);
    CHECK(result == answer(flatten(net), Query({Conjunction(terms({"Pa:a2", "Pa:a3"}))})));
    CHECK(sim.live_log_objects() == 0);
    CHECK(sim.pending_roots() == 0);
}

TEST_CASE("the reference trace under FIFO is byte-stable") {
    // interpretation-free check of the message schedule: qids, terms, visited
    Network net = star_network_with_objects();
    Simulator sim(net);
    std::ostringstream log;
    sim.set_trace([&](const TraceEvent& ev) {
        if (const auto* ask = std::get_if<AskMsg>(&ev.envelope.payload))
            log << ev.dest << "<-ask " << ask->qid.str() << " " << ask->t.local() << "\n";
        else if (const auto* tell = std::get_if<TellMsg>(&ev.envelope.payload))
            log << ev.dest << "<-tell " << tell->qid.str() << "\n";
    });
    sim.run_query("Pa", parse_query("a2 & a3"));

    // FIFO delivery fans asks out breadth-first; per-peer counters assign
    // Pa#4 to b3, Pa#5 to b1 and so on
    CHECK(log.str() ==
          "Pa<-ask Pa#1 __q0\n"   // root
          "Pa<-ask Pa#2 a2\n"
          "Pa<-ask Pa#3 a3\n"
          "Pb<-ask Pa#4 b3\n"
          "Pb<-ask Pa#5 b1\n"
          "Pb<-ask Pa#6 b2\n"
          "Pa<-tell Pa#3\n"       // I(a3)
          "Pa<-tell Pa#4\n"       // I(b3)
          "Pc<-ask Pb#1 c1\n"     // q7
          "Pc<-ask Pb#2 c2\n"     // q8
          "Pc<-ask Pb#3 c2\n"     // q9
          "Pc<-ask Pb#4 c3\n"     // q10
          "Pb<-tell Pb#1\n"
          "Pb<-tell Pb#2\n"       // cycle cut: I(c2)
          "Pb<-ask Pc#1 b1\n"     // q11
          "Pb<-ask Pc#2 b3\n"     // q12
          "Pb<-tell Pb#4\n"
          "Pa<-tell Pa#5\n"       // q5 closes: I(b1) u I(c1) u I(c2)
          "Pc<-ask Pb#5 c1\n"     // q13
          "Pc<-tell Pc#2\n"
          "Pb<-tell Pb#5\n"
          "Pc<-tell Pc#1\n"       // q11 closes
          "Pb<-tell Pb#3\n"       // q9 closes
          "Pa<-tell Pa#6\n"       // q6 closes
          "Pa<-tell Pa#2\n"       // q2 closes
          "Pa<-tell Pa#1\n");     // root completion
}

TEST_CASE("single term with no edges: two asks, two tells") {
    Network net;
    ArticulatedSource p;
    p.peer_id = "P";
    p.source.taxonomy.terminology = terms({"P:t"});
    p.source.interpretation.add(T("P:t"), O("o1"));
    net.peers.emplace("P", std::move(p));

    Simulator sim(net);
    auto [result, stats] = sim.run_query("P", parse_query("t"));
    CHECK(result == objects({"o1"}));
    CHECK(stats.asks == 2);
    CHECK(stats.tells == 2);
}

TEST_CASE("queries must use the peer's own language") {
    Simulator sim(star_network_with_objects());
    CHECK_THROWS_AS(sim.submit_query("Pa", parse_query("b1")), UnknownTermError);
    CHECK_THROWS_AS(sim.submit_query("Pa", parse_query("nope")), UnknownTermError);
}

TEST_CASE("distributed answers equal the flattened evaluation everywhere") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Network net = gen_random(seed);
        Source flat = flatten(net);
        for (const auto& [id, peer] : net.peers) {
            for (const auto& t : peer.source.terminology()) {
                Simulator sim(net);
                auto [result, stats] = sim.run_query(id, Query::single(t));
                ObjSet expected = answer_term(flat, t, {t});
                CHECK(result == expected);
                CHECK(stats.asks == stats.tells);
                CHECK(sim.live_log_objects() == 0);
            }
        }
    }
}

TEST_CASE("message counts equal the centralized recursion size") {
    Network net = star_network_with_objects();
    Source flat = flatten(net);
    for (const auto& [id, peer] : net.peers) {
        for (const auto& t : peer.source.terminology()) {
            Simulator sim(net);
            auto [result, stats] = sim.run_query(id, Query::single(t));
            size_t calls = answer_call_count(flat, Query::single(t));
            CHECK(stats.asks == calls);
            CHECK(stats.tells == calls);
        }
    }
}

TEST_CASE("random schedules deliver the same answers") {
    Network net = star_network_with_objects();
    Query q = parse_query("a2 & a3");
    Simulator fifo(net);
    auto [expected, fifo_stats] = fifo.run_query("Pa", q);
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        Simulator sim(net, CachePolicy::none, SchedulerConfig{SchedulerKind::random, seed});
        auto [result, stats] = sim.run_query("Pa", q);
        CHECK(result == expected);
        CHECK(stats.asks == fifo_stats.asks);
        CHECK(stats.tells == fifo_stats.tells);
    }
}

TEST_CASE("concurrent root queries stay isolated") {
    Network net = star_network_with_objects();
    Simulator sim(net);
    QueryHandle h1 = sim.submit_query("Pa", parse_query("a2 & a3"));
    QueryHandle h2 = sim.submit_query("Pa", parse_query("a1"));
    QueryHandle h3 = sim.submit_query("Pb", parse_query("b1 | b2"));
    sim.run_until_quiescent();
    REQUIRE(h1.done());
    REQUIRE(h2.done());
    REQUIRE(h3.done());
    Source flat = flatten(net);
    CHECK(h1.result() == answer(flat, Query({Conjunction(terms({"Pa:a2", "Pa:a3"}))})));
    CHECK(h2.result() == answer(flat, Query::single(T("Pa:a1"))));
    CHECK(h3.result() == answer(flat, Query({Conjunction(terms({"Pb:b1"})),
                                             Conjunction(terms({"Pb:b2"}))})));
    CHECK(sim.live_log_objects() == 0);
}

TEST_CASE("unknown tells are dropped and counted") {
    Network net = star_network_with_objects();
    Simulator sim(net);
    sim.inject(Envelope{"Pa", "Pa", TellMsg{{"Pa", 99}, objects({"o1"}), {}, {}}});
    RunStats stats = sim.run_until_quiescent();
    CHECK(stats.protocol_errors == 1);

    sim.inject(Envelope{"Pa", "Pa", AskMsg{"Pa", {"Pa", 100}, T("Pb:b1"), terms({"Pb:b1"})}});
    stats = sim.run_until_quiescent();
    CHECK(stats.protocol_errors == 1);
}

TEST_CASE("the message budget trips on runaway runs") {
    Network net = star_network_with_objects();
    Simulator sim(net);
    sim.submit_query("Pa", parse_query("a2 & a3"));
    CHECK_THROWS_AS(sim.run_until_quiescent(3), DivergedError);
}

TEST_CASE("log object peak stays within the ask count") {
    Network net = star_network_with_objects();
    Simulator sim(net);
    auto [result, stats] = sim.run_query("Pa", parse_query("a2 & a3"));
    CHECK(stats.log_objects_peak > 0);
    CHECK(stats.log_objects_peak <= stats.asks);
}
