/*
 * Copyright 2026 The hypersynth authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <random>

#include "hsyn/hypergame.hpp"
#include "hsyn/pipeline.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hsyn;
using namespace hsyn::testing;

namespace {

std::set<std::string> action_names(const Arena &a, const std::vector<ActionId> &acts)
{
    std::set<std::string> out;
    for (auto x : acts) out.insert(a.action_name(x));
    return out;
}

std::set<std::string> kept(const Arena &a, const RestrictedGame &rg, Vertex v)
{
    std::set<std::string> out;
    for (const auto &m : rg.graph.moves(v)) out.insert(a.action_name(m.action));
    return out;
}

std::optional<Vertex> hts_step(const Arena &a, const Hts &h, Vertex v, const std::string &action)
{
    for (const auto &m : h.graph.moves(v))
        if (a.action_name(m.action) == action) return m.target;
    return std::nullopt;
}

HypergameInput random_input(std::mt19937_64 &rng, std::size_t states, std::size_t nq)
{
    const ArenaShape shape{states, 3, 2, 0.25};
    return {random_arena(rng, shape), random_dfa(rng, nq, prop_names(shape.props))};
}

}  // namespace

TEST_CASE("perceived regions of the running example")
{
    const Synthesis syn = running_synthesis();
    const Arena &a = running_example().arena;
    const auto &r2 = syn.perceived_solution.regions;
    const auto &g2 = syn.perceived_game;
    for (Vertex s = 0; s < a.num_states(); ++s) {
        CHECK(r2.in_win1(g2.vertex(s, 1)));
        CHECK(r2.in_win1(g2.vertex(s, 0)) == (a.id(s) == "3"));
    }
}

TEST_CASE("rationalizable actions")
{
    const Synthesis syn = running_synthesis();
    const Arena &a = running_example().arena;
    const auto &g2 = syn.perceived_game;
    const auto &r2 = syn.perceived_solution.regions;
    auto sr = [&](const char *s, std::uint32_t p, Player who) {
        return action_names(a, sr_actions(g2, r2, g2.vertex(a.index_of(s), p), who));
    };
    using S = std::set<std::string>;
    CHECK(sr("4", 0, Player::two) == S{"4->5"});
    CHECK(sr("1", 0, Player::two) == S{"1->0", "1->4"});
    CHECK(sr("0", 0, Player::one) == S{"0->1"});
    CHECK(sr("3", 0, Player::one) == S{"3->2"});
    CHECK(sr("6", 0, Player::one) == S{"6->5", "6->7"});
    // the map agrees with the free function for the owner
    CHECK(action_names(a, syn.sr.actions(g2.vertex(a.index_of("4"), 0))) == S{"4->5"});
    CHECK(action_names(a, syn.sr.actions(g2.vertex(a.index_of("3"), 0))) == S{"3->2"});
    CHECK_THROWS_AS(sr_actions(g2, r2, 999, Player::one), Error);
}

TEST_CASE("hypergame transitions of the running example")
{
    const Synthesis syn = running_synthesis();
    const Arena &a = running_example().arena;
    const Hts &h = syn.hts;
    CHECK(h.nq() == 2);
    CHECK(h.initial == hts_vertex(a, h, "0", 0, 0));
    CHECK(hts_step(a, h, hts_vertex(a, h, "4", 0, 0), "4->5") == hts_vertex(a, h, "5", 1, 0));
    CHECK(hts_step(a, h, hts_vertex(a, h, "1", 0, 0), "1->2") == hts_vertex(a, h, "2", 0, 1));
}

TEST_CASE("reachable hypergame states match breadth-first search")
{
    const auto &in = running_example();
    const Synthesis syn = running_synthesis();
    const auto oracle_states = oracle::hts_reachable(in.arena, syn.dfa);
    std::set<Vertex> expect;
    for (auto [s, q, p] : oracle_states) expect.insert(syn.hts.vertex(s, q, p));
    std::set<Vertex> got;
    for (Vertex v = 0; v < syn.hts.reachable.size(); ++v)
        if (syn.hts.reachable[v]) got.insert(v);
    CHECK(got == expect);
    CHECK(got.size() == 22);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        const auto r = random_input(rng, 15, 3);
        const Synthesis s = synthesize(r);
        std::size_t count = 0;
        for (auto x : s.hts.reachable) count += x;
        const auto o = oracle::hts_reachable(r.arena, s.dfa);
        CHECK(count == o.size());
        for (auto [st, q, p] : o) CHECK(s.hts.reachable[s.hts.vertex(st, q, p)]);
    }
}

TEST_CASE("hypergame projections are product paths; target depends on (s,q)")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) {
        const auto in = random_input(rng, 12, 3);
        const Synthesis s = synthesize(in);
        const Hts &h = s.hts;
        for (Vertex v = 0; v < h.graph.num_vertices(); ++v) {
            CHECK(h.graph.owner(v) == in.arena.owner(h.arena_state(v)));
            CHECK(h.target[v] == s.true_solution.regions.win1[h.true_vertex(v)]);
            for (const auto &m : h.graph.moves(v)) {
                const auto t1 = successor(s.true_game.graph, h.true_vertex(v), m.action);
                const auto t2 = successor(s.perceived_game.graph, h.perceived_vertex(v), m.action);
                REQUIRE(t1.has_value());
                REQUIRE(t2.has_value());
                CHECK(*t1 == h.true_vertex(m.target));
                CHECK(*t2 == h.perceived_vertex(m.target));
            }
        }
    }
}

TEST_CASE("restricted game of the running example")
{
    const Arena &a = running_example().arena;
    for (TargetMode mode : {TargetMode::arena_marking, TargetMode::true_region}) {
        const Synthesis syn = running_synthesis(mode);
        const Hts &h = syn.hts;
        using S = std::set<std::string>;
        CHECK(kept(a, syn.rg, hts_vertex(a, h, "3", 0, 0)) == S{"3->2"});
        CHECK(kept(a, syn.rg, hts_vertex(a, h, "4", 0, 0)) == S{"4->5"});
        CHECK(kept(a, syn.rg, hts_vertex(a, h, "1", 0, 0)) == S{"1->0", "1->4"});
        CHECK(kept(a, syn.rg, hts_vertex(a, h, "5", 1, 0)) == S{"5->4", "5->6"});
        bool found = false;
        for (const auto &[v, m] : syn.rg.removed)
            found = found || (v == hts_vertex(a, h, "4", 0, 0) && m.target == hts_vertex(a, h, "3", 0, 0));
        CHECK(found);
    }
}

TEST_CASE("restricted game invariants")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 60; ++i) {
        const auto in = random_input(rng, 14, 3);
        const Synthesis s = synthesize(in);
        const Hts &h = s.hts;
        const auto &g2 = s.perceived_game;
        const auto &r2 = s.perceived_solution.regions;
        for (Vertex v = 0; v < h.graph.num_vertices(); ++v) {
            const Vertex sp = h.perceived_vertex(v);
            const Player who = h.graph.owner(v);
            std::vector<ActionId> full, restricted;
            for (const auto &m : h.graph.moves(v)) full.push_back(m.action);
            for (const auto &m : s.rg.graph.moves(v)) restricted.push_back(m.action);
            if (h.target[v] || !r2.in_win(who, sp)) {
                CHECK(restricted == full);
            } else {
                CHECK(restricted == sr_actions(g2, r2, sp, who));
                CHECK(!restricted.empty());
                for (const auto &m : s.rg.graph.moves(v)) CHECK(r2.in_win(who, h.perceived_vertex(m.target)));
            }
        }
        for (const auto &[v, m] : s.rg.removed) {
            CHECK(!h.target[v]);
            if (h.graph.owner(v) == Player::two) CHECK(r2.in_win1(h.perceived_vertex(m.target)));
            else CHECK(r2.in_win2(h.perceived_vertex(m.target)));
        }
        const auto frag = reachable_from(s.rg.graph, s.rg.initial);
        CHECK(frag == s.rg.fragment);
    }
}

TEST_CASE("deceptive sure region of the running example")
{
    const Arena &a = running_example().arena;
    const Synthesis syn = running_synthesis();
    const DeceptiveSure ds = solve_deceptive_sure(syn.rg);
    CHECK(triples_of(a, syn.hts, ds.domain)
          == TripleSet{{"0", 0, 0}, {"1", 0, 0}, {"4", 0, 0}, {"4", 1, 0}, {"5", 1, 0}, {"6", 1, 0}, {"7", 1, 0}});
    CHECK(triples_of(a, syn.hts, ds.win)
          == TripleSet{{"5", 1, 0}, {"6", 1, 0}, {"7", 1, 0}, {"4", 1, 0}, {"4", 0, 0}});
    CHECK(!ds.win[hts_vertex(a, syn.hts, "1", 0, 0)]);
    for (Vertex v = 0; v < ds.win.size(); ++v)
        if (syn.hts.target[v]) CHECK(!ds.strategy.defined(v));
}

TEST_CASE("deceptive sure region with the product-level target")
{
    // (4,1,0) lies in the true product's winning region, so the restriction
    // never applies there and the fragment grows through 4->3.
    const Arena &a = running_example().arena;
    const Synthesis syn = running_synthesis(TargetMode::true_region);
    const DeceptiveSure ds = solve_deceptive_sure(syn.rg);
    std::size_t fragment = 0;
    for (auto x : ds.domain) fragment += x;
    CHECK(fragment == 16);
    CHECK(triples_of(a, syn.hts, ds.win)
          == TripleSet{{"0", 1, 1}, {"1", 1, 1}, {"2", 1, 1}, {"3", 1, 0}, {"3", 1, 1}, {"4", 0, 0}, {"4", 1, 0},
                       {"4", 1, 1}, {"5", 1, 0}, {"5", 1, 1}, {"6", 1, 0}, {"6", 1, 1}, {"7", 1, 0}, {"7", 1, 1}});
}

TEST_CASE("misperception enlarges the arena-level winning set")
{
    const Arena &a = running_example().arena;
    const Synthesis syn = running_synthesis();
    const DeceptiveSure ds = solve_deceptive_sure(syn.rg);
    std::set<std::string> deceptive, truth;
    for (Vertex v = 0; v < ds.win.size(); ++v)
        if (ds.win[v]) deceptive.insert(a.id(syn.hts.arena_state(v)));
    for (Vertex s = 0; s < a.num_states(); ++s)
        if (syn.true_marking->solution.regions.in_win1(s)) truth.insert(a.id(s));
    CHECK(truth == std::set<std::string>{"5", "6", "7"});
    CHECK(deceptive == std::set<std::string>{"4", "5", "6", "7"});
}

TEST_CASE("without misperception the diagonal matches the true region")
{
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        ArenaSpec spec = random_arena_spec(rng, {15, 3, 2, 0.25});
        spec.label_perceived = spec.label_true;
        const HypergameInput in{make_arena(spec), random_dfa(rng, 3, prop_names(2))};
        SynthesisOptions opts;
        opts.full_space = true;
        const Synthesis s = synthesize(in, opts);
        const DeceptiveSure ds = solve_deceptive_sure(s.rg, true);
        const Hts &h = s.hts;
        for (Vertex st = 0; st < in.arena.num_states(); ++st)
            for (std::uint32_t q = 0; q < h.nq(); ++q)
                CHECK(ds.win[h.vertex(st, q, q)] == s.true_solution.regions.win1[s.true_game.vertex(st, q)]);
    }
}

TEST_CASE("sure region contains the target and matches the attractor oracle")
{
    std::mt19937_64 rng(59);
    for (int i = 0; i < 60; ++i) {
        const auto in = random_input(rng, 14, 3);
        const bool full = i % 2 == 0;
        SynthesisOptions opts;
        opts.full_space = full;
        const Synthesis s = synthesize(in, opts);
        const DeceptiveSure ds = solve_deceptive_sure(s.rg, full);
        const Subgraph sub = induced_subgraph(s.rg.graph, ds.domain);
        std::vector<std::uint8_t> target(sub.to_parent.size());
        for (Vertex k = 0; k < target.size(); ++k) target[k] = s.rg.target[sub.to_parent[k]];
        const auto attr = oracle::attractor(sub.graph, target);
        for (Vertex k = 0; k < target.size(); ++k) {
            const Vertex v = sub.to_parent[k];
            CHECK(ds.win[v] == attr[k]);
            if (target[k]) CHECK(ds.win[v]);
        }
        for (Vertex v = 0; v < ds.win.size(); ++v)
            if (!ds.domain[v]) CHECK(!ds.win[v]);
    }
}

TEST_CASE("the sure strategy only takes rationalizable actions")
{
    auto check = [](const Synthesis &s) {
        const DeceptiveSure ds = solve_deceptive_sure(s.rg);
        const Hts &h = s.hts;
        for (Vertex v = 0; v < ds.win.size(); ++v) {
            if (!ds.win[v] || h.target[v] || h.graph.owner(v) != Player::one) continue;
            const auto a = ds.strategy(v);
            REQUIRE(a.has_value());
            const auto allowed = sr_actions(s.perceived_game, s.perceived_solution.regions, h.perceived_vertex(v),
                                            Player::one);
            CHECK(std::find(allowed.begin(), allowed.end(), *a) != allowed.end());
        }
    };
    check(running_synthesis());
    check(running_synthesis(TargetMode::true_region));
    std::mt19937_64 rng(61);
    for (int i = 0; i < 60; ++i) check(synthesize(random_input(rng, 14, 3)));
}

TEST_CASE("arena marking applicability")
{
    const std::vector<std::string> ab{"a", "b"};
    CHECK(arena_marking_applicable(compile_to_dfa(parse_formula("F a", ab), ab)));
    CHECK(arena_marking_applicable(compile_to_dfa(parse_formula("F a | F b", ab), ab)));
    CHECK(!arena_marking_applicable(compile_to_dfa(parse_formula("a U b", ab), ab)));
    CHECK(!arena_marking_applicable(compile_to_dfa(parse_formula("F (a & X b)", ab), ab)));

    HypergameInput in{running_example().arena, compile_to_dfa(parse_formula("!A U A", std::vector<std::string>{"A"}),
                                                              std::vector<std::string>{"A"})};
    SynthesisOptions opts;
    opts.target = TargetMode::arena_marking;
    CHECK_NOTHROW(synthesize(in, opts));
    in.objective = compile_to_dfa(parse_formula("X A", std::vector<std::string>{"A"}), std::vector<std::string>{"A"});
    CHECK_THROWS_AS(synthesize(in, opts), Error);
    CHECK_NOTHROW(synthesize(in));
}

TEST_CASE("serial and parallel builds agree")
{
    std::mt19937_64 rng(67);
    for (int i = 0; i < 10; ++i) {
        const auto in = random_input(rng, 120, 4);
        SynthesisOptions ser, par;
        ser.exec = Exec::serial;
        par.exec = Exec::parallel;
        const Synthesis a = synthesize(in, ser);
        const Synthesis b = synthesize(in, par);
        CHECK(a.hts.graph == b.hts.graph);
        CHECK(a.hts.target == b.hts.target);
        CHECK(a.hts.reachable == b.hts.reachable);
        CHECK(a.rg.graph == b.rg.graph);
        CHECK(a.rg.fragment == b.rg.fragment);
    }
}
