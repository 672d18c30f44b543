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

#include "hsyn/simulate.hpp"

#include <algorithm>
#include <random>

namespace hsyn {

VerificationReport verify_sure(const RestrictedGame &rg, const Strategy &strat, Vertex start,
                               std::optional<std::size_t> bound)
{
    const GameGraph &g = rg.graph;
    const std::size_t n = g.num_vertices();
    if (start >= n) throw input_error("verification start state is not a game state");

    VerificationReport rep;
    rep.bound = bound.value_or(static_cast<std::size_t>(std::count(rg.fragment.begin(), rg.fragment.end(), 1)));

    enum : std::uint8_t { white, gray, black };
    std::vector<std::uint8_t> color(n, white);
    std::vector<std::size_t> dist(n, 0);

    // Successors of v in the strategy-induced graph.
    auto children = [&](Vertex v) -> std::vector<Move> {
        if (rg.target[v]) return {};
        if (g.owner(v) == Player::one) {
            auto a = strat(v);
            if (!a) throw logic_error("strategy undefined at reached P1 state " + std::to_string(v));
            for (const Move &m : g.moves(v))
                if (m.action == *a) return {m};
            throw logic_error("strategy action is not available in the restricted game at state "
                              + std::to_string(v));
        }
        const auto ms = g.moves(v);
        return {ms.begin(), ms.end()};
    };

    struct Frame
    {
        Vertex v;
        std::vector<Move> next;
        std::size_t i = 0;
    };
    std::vector<Frame> stack;
    color[start] = gray;
    stack.push_back({start, children(start)});

    while (!stack.empty()) {
        Frame &f = stack.back();
        if (f.i == f.next.size()) {
            std::size_t d = 0;
            for (const Move &m : f.next) d = std::max(d, dist[m.target] + 1);
            dist[f.v] = d;
            color[f.v] = black;
            stack.pop_back();
            continue;
        }
        const Move m = f.next[f.i++];
        if (color[m.target] == black) continue;
        if (color[m.target] == gray) {
            Trace &cx = rep.counterexample;
            for (const Frame &fr : stack) cx.states.push_back(fr.v);
            for (std::size_t k = 1; k < stack.size(); ++k) cx.actions.push_back(stack[k - 1].next[stack[k - 1].i - 1].action);
            cx.actions.push_back(m.action);
            cx.states.push_back(m.target);
            for (std::size_t k = 0; k < stack.size(); ++k)
                if (stack[k].v == m.target) rep.cycle_start = k;
            return rep;
        }
        color[m.target] = gray;
        stack.push_back({m.target, children(m.target)});
    }

    rep.worst_case_steps = dist[start];
    if (dist[start] <= rep.bound) {
        rep.verified = true;
        return rep;
    }
    // Longest play: follow a child with maximal remaining distance.
    Trace &cx = rep.counterexample;
    Vertex v = start;
    cx.states.push_back(v);
    while (dist[v] > 0) {
        const auto next = children(v);
        const Move *best = &next.front();
        for (const Move &m : next)
            if (dist[m.target] > dist[best->target]) best = &m;
        cx.actions.push_back(best->action);
        v = best->target;
        cx.states.push_back(v);
    }
    cx.reached_target = rg.target[v] != 0;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

std::size_t sample_index(std::size_t n, std::mt19937_64 &rng, const SupportSampling &sampling)
{
    if (n == 1) return 0;
    if (sampling.kind == SupportSampling::Kind::skewed) {
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        if (coin(rng) < sampling.first_weight) return 0;
        return 1 + std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
    }
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Vertex local_start(const StochasticGame &g, Vertex start)
{
    if (start >= g.from_hts.size() || g.from_hts[start] < 0)
        throw input_error("simulation start state is outside the solved fragment");
    return static_cast<Vertex>(g.from_hts[start]);
}

}  // namespace

Trace simulate_trial(const StochasticGame &g, const AswResult &asw, Vertex start, std::size_t cap,
                     std::uint64_t seed, std::uint64_t trial, const SupportSampling &sampling)
{
    auto rng = trial_rng(seed, trial);
    Vertex v = local_start(g, start);
    Trace t;
    t.states.push_back(g.to_hts[v]);
    for (std::size_t step = 0; step < cap && !g.sink[v]; ++step) {
        const auto moves = g.graph.moves(v);
        if (moves.empty()) break;
        const Move *chosen = &moves.front();
        if (g.is_choice(v)) {
            if (auto a = asw.strategy(v)) {
                for (const Move &m : moves)
                    if (m.action == *a) chosen = &m;
            }
        } else {
            chosen = &moves[sample_index(moves.size(), rng, sampling)];
        }
        t.actions.push_back(chosen->action);
        v = chosen->target;
        t.states.push_back(g.to_hts[v]);
    }
    t.reached_target = g.sink[v] != 0;
    return t;
}

SimulationStats simulate_asw(const StochasticGame &g, const Hts &hts, const SrActionMap &sr, const AswResult &asw,
                             Vertex start, const SimulationOptions &opts)
{
    SimulationStats st;
    st.trials = opts.trials;
    st.seed = opts.seed;
    st.cap = opts.cap.value_or(100 * g.size());
    if (st.cap == 0) throw input_error("simulation step cap must be at least 1");
    st.start_in_region = asw.region.at(local_start(g, start)) != 0;

    std::size_t wins = 0, violations = 0;
    std::uint64_t steps = 0;
    const auto count = static_cast<std::int64_t>(opts.trials);
    auto run = [&](std::int64_t i, std::size_t &w, std::size_t &viol, std::uint64_t &s) {
        const Trace t = simulate_trial(g, asw, start, st.cap, opts.seed, static_cast<std::uint64_t>(i), opts.sampling);
        w += t.reached_target;
        viol += !audit_stealth(t, hts, sr, hts.target);
        s += t.actions.size();
    };
    if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : wins, violations, steps)
        for (std::int64_t i = 0; i < count; ++i) run(i, wins, violations, steps);
    } else {
        for (std::int64_t i = 0; i < count; ++i) run(i, wins, violations, steps);
    }
    st.wins = wins;
    st.losses_by_cap = opts.trials - wins;
    st.stealth_violations = violations;
    st.total_steps = steps;
    return st;
}

bool audit_stealth(const Trace &trace, const Hts &hts, const SrActionMap &sr, std::span<const std::uint8_t> target)
{
    if (trace.states.empty()) return true;
    if (trace.actions.size() + 1 != trace.states.size()) throw input_error("trace has mismatched states and actions");
    for (std::size_t i = 0; i < trace.actions.size(); ++i) {
        const Vertex v = trace.states[i];
        if (successor(hts.graph, v, trace.actions[i]) != trace.states[i + 1])
            throw input_error("trace step " + std::to_string(i) + " does not follow the transition system");
    }
    for (std::size_t i = 0; i < trace.actions.size(); ++i) {
        const Vertex v = trace.states[i];
        if (target[v]) break;
        if (hts.graph.owner(v) != Player::one) continue;
        const auto ok = sr_actions(sr.perceived(), sr.regions(), hts.perceived_vertex(v), Player::one);
        if (std::find(ok.begin(), ok.end(), trace.actions[i]) == ok.end()) return false;
    }
    return true;
}

}  // namespace hsyn
