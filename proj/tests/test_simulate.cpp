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

#include "hsyn/pipeline.hpp"
#include "hsyn/simulate.hpp"
#include "support/fixtures.hpp"

using namespace hsyn;
using namespace hsyn::testing;

namespace {

struct Solved
{
    Synthesis syn;
    DeceptiveSure sure;
    Strategy total;
    StochasticGame game;
    AswResult asw;
};

Solved solve_all(Synthesis syn, bool full = false)
{
    DeceptiveSure ds = solve_deceptive_sure(syn.rg, full);
    Strategy total = complete_strategy(syn.rg.graph, ds.strategy);
    StochasticGame g = build_stochastic_game(syn.rg, full);
    AswResult r = solve_asw(g);
    return {std::move(syn), std::move(ds), std::move(total), std::move(g), std::move(r)};
}

const Solved &running()
{
    static const Solved s = solve_all(running_synthesis());
    return s;
}

Trace trace_of(const Arena &a, const Hts &h, const std::vector<Triple> &states)
{
    Trace t;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto &[s, q, p] = states[i];
        t.states.push_back(hts_vertex(a, h, s, q, p));
        if (i == 0) continue;
        for (const auto &m : h.graph.moves(t.states[i - 1]))
            if (m.target == t.states[i]) t.actions.push_back(m.action);
    }
    return t;
}

}  // namespace

TEST_CASE("verify: sure region states are verified")
{
    const Arena &a = running_example().arena;
    const Solved &s = running();
    const Hts &h = s.syn.hts;
    for (const auto &[st, q, p] : TripleSet{{"5", 1, 0}, {"6", 1, 0}, {"7", 1, 0}, {"4", 1, 0}, {"4", 0, 0}}) {
        const auto rep = verify_sure(s.syn.rg, s.total, hts_vertex(a, h, st, q, p));
        CHECK(rep.verified);
        CHECK(rep.bound == 7);
    }
    const auto inside = verify_sure(s.syn.rg, s.total, hts_vertex(a, h, "5", 1, 0));
    CHECK(inside.worst_case_steps == 0);
    CHECK(verify_sure(s.syn.rg, s.total, hts_vertex(a, h, "4", 0, 0)).worst_case_steps == 1);
}

TEST_CASE("verify: the adversary loops from (1,0,0)")
{
    const Arena &a = running_example().arena;
    const Solved &s = running();
    const Hts &h = s.syn.hts;
    const auto rep = verify_sure(s.syn.rg, s.total, hts_vertex(a, h, "1", 0, 0));
    CHECK(!rep.verified);
    REQUIRE(rep.cycle_start.has_value());
    std::vector<Triple> play;
    for (Vertex v : rep.counterexample.states) play.push_back(triple_of(a, h, v));
    CHECK(play == std::vector<Triple>{{"1", 0, 0}, {"0", 0, 0}, {"1", 0, 0}});
    CHECK(*rep.cycle_start == 0);
    REQUIRE(rep.counterexample.actions.size() == 2);
    CHECK(a.action_name(rep.counterexample.actions[0]) == "1->0");
}

TEST_CASE("verify: bound and missing strategy")
{
    const Arena &a = running_example().arena;
    const Solved &s = running();
    const Hts &h = s.syn.hts;
    const auto rep = verify_sure(s.syn.rg, s.total, hts_vertex(a, h, "4", 0, 0), 0);
    CHECK(!rep.verified);
    CHECK(!rep.cycle_start.has_value());
    CHECK(rep.counterexample.reached_target);
    CHECK(rep.counterexample.states.size() == 2);
    CHECK_THROWS_AS(verify_sure(s.syn.rg, Strategy(h.graph.num_vertices()), h.initial), Error);
    CHECK_THROWS_AS(verify_sure(s.syn.rg, s.total, 10000), Error);
}

TEST_CASE("verify agrees with the sure region on random instances")
{
    std::mt19937_64 rng(131);
    for (int i = 0; i < 40; ++i) {
        HypergameInput in{random_arena(rng, {15, 3, 2, 0.25, 0.1}), random_dfa(rng, 3, prop_names(2))};
        const Solved s = solve_all(synthesize(in));
        for (Vertex v = 0; v < s.sure.domain.size(); ++v) {
            if (!s.sure.domain[v]) continue;
            const auto rep = verify_sure(s.syn.rg, s.total, v);
            CHECK(rep.verified == (s.sure.win[v] != 0));
        }
    }
}

TEST_CASE("simulation from every almost-sure state of the running example")
{
    const Solved &s = running();
    for (Vertex v = 0; v < s.game.size(); ++v) {
        SimulationOptions opts;
        opts.trials = 2000;
        opts.cap = 800;
        opts.seed = 5;
        const auto st = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.game.to_hts[v], opts);
        CHECK(st.start_in_region);
        CHECK(st.wins + st.losses_by_cap == st.trials);
        CHECK(*st.win_rate() >= 0.999);
        CHECK(st.stealth_violations == 0);
    }
}

TEST_CASE("simulation is reproducible and independent of threading")
{
    const Solved &s = running();
    SimulationOptions opts;
    opts.trials = 3000;
    opts.seed = 42;
    const auto a = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.syn.hts.initial, opts);
    const auto b = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.syn.hts.initial, opts);
    opts.exec = Exec::serial;
    const auto c = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.syn.hts.initial, opts);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.cap == 100 * s.game.size());
    opts.seed = 43;
    const auto d = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.syn.hts.initial, opts);
    CHECK(d.total_steps != a.total_steps);

    const Trace t1 = simulate_trial(s.game, s.asw, s.syn.hts.initial, 100, 9, 17);
    const Trace t2 = simulate_trial(s.game, s.asw, s.syn.hts.initial, 100, 9, 17);
    CHECK(t1.states == t2.states);
    CHECK(t1.actions == t2.actions);
}

TEST_CASE("skewed sampling keeps the probability-one conclusion")
{
    const Solved &s = running();
    SimulationOptions opts;
    opts.trials = 5000;
    opts.cap = 800;
    opts.sampling.kind = SupportSampling::Kind::skewed;
    const auto st = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.syn.hts.initial, opts);
    CHECK(*st.win_rate() >= 0.999);
    CHECK(st.stealth_violations == 0);
    // (1,0,0) prefers 1->0 under skewing, so plays take longer
    opts.sampling.kind = SupportSampling::Kind::uniform;
    const auto uni = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.syn.hts.initial, opts);
    CHECK(st.total_steps > uni.total_steps);
}

TEST_CASE("degenerate simulation settings")
{
    const Solved &s = running();
    SimulationOptions opts;
    opts.trials = 0;
    const auto st = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.syn.hts.initial, opts);
    CHECK(st.trials == 0);
    CHECK(st.wins == 0);
    CHECK(!st.win_rate().has_value());
    opts.cap = 0;
    opts.trials = 1;
    CHECK_THROWS_AS(simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.syn.hts.initial, opts), Error);
    const Arena &a = running_example().arena;
    opts.cap = 10;
    CHECK_THROWS_AS(simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, hts_vertex(a, s.syn.hts, "3", 0, 0), opts),
                    Error);
}

TEST_CASE("start outside the almost-sure region is flagged")
{
    std::mt19937_64 rng(137);
    int seen = 0;
    for (int i = 0; i < 200 && seen < 5; ++i) {
        HypergameInput in{random_arena(rng, {10, 3, 1, 0.25, 0.2}), random_dfa(rng, 2, prop_names(1))};
        const Solved s = solve_all(synthesize(in));
        for (Vertex v = 0; v < s.game.size(); ++v) {
            if (s.asw.region[v]) continue;
            SimulationOptions opts;
            opts.trials = 50;
            const auto st = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.game.to_hts[v], opts);
            CHECK(!st.start_in_region);
            CHECK(st.wins < st.trials);
            ++seen;
            break;
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("random instances: almost-sure plays win and stay stealthy")
{
    std::mt19937_64 rng(139);
    for (int i = 0; i < 20; ++i) {
        HypergameInput in{random_arena(rng, {12, 3, 2, 0.25}), random_dfa(rng, 3, prop_names(2))};
        const Solved s = solve_all(synthesize(in));
        for (Vertex v = 0; v < s.game.size(); ++v) {
            if (!s.asw.region[v]) continue;
            SimulationOptions opts;
            opts.trials = 300;
            const auto st = simulate_asw(s.game, s.syn.hts, s.syn.sr, s.asw, s.game.to_hts[v], opts);
            CHECK(st.wins == st.trials);
            CHECK(st.stealth_violations == 0);
        }
    }
}

TEST_CASE("stealth audit")
{
    const Arena &a = running_example().arena;
    const Solved &s = running();
    const Hts &h = s.syn.hts;
    const auto &target = h.target;
    CHECK(audit_stealth(trace_of(a, h, {{"0", 0, 0}, {"1", 0, 0}, {"4", 0, 0}, {"5", 1, 0}}), h, s.syn.sr, target));
    CHECK(!audit_stealth(trace_of(a, h, {{"3", 0, 0}, {"4", 0, 0}, {"5", 1, 0}}), h, s.syn.sr, target));
    CHECK(audit_stealth(trace_of(a, h, {{"3", 0, 0}, {"2", 0, 1}}), h, s.syn.sr, target));
    CHECK(audit_stealth(trace_of(a, h, {{"5", 1, 0}, {"4", 1, 0}, {"3", 1, 0}, {"4", 1, 0}}), h, s.syn.sr, target));
    CHECK(audit_stealth(Trace{}, h, s.syn.sr, target));

    Trace broken = trace_of(a, h, {{"0", 0, 0}, {"1", 0, 0}});
    broken.states[1] = hts_vertex(a, h, "5", 1, 0);
    CHECK_THROWS_AS(audit_stealth(broken, h, s.syn.sr, target), Error);
    broken.actions.clear();
    CHECK_THROWS_AS(audit_stealth(broken, h, s.syn.sr, target), Error);
}
