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

#include "hsyn/hypergame.hpp"

#include <algorithm>

namespace hsyn {

Hts build_hts(const Arena &arena, const Dfa &dfa, const Regions &win11, Exec exec)
{
    if (dfa.props != arena.props()) throw logic_error("DFA alphabet does not match the arena's propositions");
    const std::size_t nq = dfa.num_states();
    const std::size_t ns = arena.num_states();
    if (win11.size() != ns * nq) throw logic_error("true-game regions do not match the arena x DFA product");
    if (ns * nq * nq > kMaxHtsStates)
        throw Error(ErrorKind::resource, "hypergame transition system would exceed "
                                             + std::to_string(kMaxHtsStates) + " states");

    Hts h;
    h.num_dfa_states = nq;
    const std::size_t nq2 = nq * nq;
    const std::size_t n = ns * nq2;

    std::vector<Player> owner(n);
    std::vector<std::size_t> offsets(n + 1, 0);
    for (Vertex s = 0; s < ns; ++s) {
        const std::size_t deg = arena.out_edges(s).size();
        for (std::size_t k = 0; k < nq2; ++k) offsets[s * nq2 + k + 1] = offsets[s * nq2 + k] + deg;
    }
    std::vector<Move> moves(offsets.back());
    h.target.assign(n, 0);

    auto fill = [&](std::int64_t v) {
        const Vertex s = static_cast<Vertex>(v / nq2);
        const auto q = static_cast<std::uint32_t>((v / nq) % nq);
        const auto p = static_cast<std::uint32_t>(v % nq);
        owner[v] = arena.owner(s);
        h.target[v] = win11.win1[s * nq + q];
        std::size_t k = offsets[v];
        ActionId a = arena.first_edge(s);
        for (const auto &e : arena.out_edges(s)) {
            const auto q2 = dfa.step(q, arena.label(Labeling::truth, e.to));
            const auto p2 = dfa.step(p, arena.label(Labeling::perceived, e.to));
            moves[k++] = {static_cast<Vertex>((e.to * nq + q2) * nq + p2), a++};
        }
    };
    const auto count = static_cast<std::int64_t>(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t v = 0; v < count; ++v) fill(v);
    } else {
        for (std::int64_t v = 0; v < count; ++v) fill(v);
    }

    h.graph = GameGraph(std::move(owner), std::move(offsets), std::move(moves));
    const Vertex s0 = arena.initial();
    h.initial = h.vertex(s0, dfa.step(dfa.initial, arena.label(Labeling::truth, s0)),
                         dfa.step(dfa.initial, arena.label(Labeling::perceived, s0)));
    h.reachable = reachable_from(h.graph, h.initial);
    return h;
}

bool arena_marking_applicable(const Dfa &dfa)
{
    std::vector<std::uint8_t> seen(dfa.num_states(), 0);
    std::vector<std::uint32_t> stack{dfa.initial};
    seen[dfa.initial] = 1;
    while (!stack.empty()) {
        const auto q = stack.back();
        stack.pop_back();
        for (Symbol s = 0; s < dfa.alphabet_size(); ++s) {
            const auto t = dfa.step(q, s);
            const bool by_initial = dfa.is_accepting(dfa.step(dfa.initial, s));
            if (by_initial && !dfa.is_accepting(t)) return false;
            if (!by_initial && !dfa.is_accepting(q) && dfa.is_accepting(t)) return false;
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return true;
}

ArenaMarking solve_arena_marking(const Arena &arena, const Dfa &dfa, Labeling which)
{
    if (dfa.props != arena.props()) throw logic_error("DFA alphabet does not match the arena's propositions");
    if (!arena_marking_applicable(dfa))
        throw input_error("arena-level target marking needs an objective decided by the label of a single state");
    ArenaMarking m;
    m.marked.assign(arena.num_states(), 0);
    for (Vertex s = 0; s < arena.num_states(); ++s)
        m.marked[s] = dfa.is_accepting(dfa.step(dfa.initial, arena.label(which, s)));
    m.solution = solve_reachability(arena.as_game(), m.marked);
    return m;
}

void retarget_to_arena(Hts &hts, const Regions &arena_win1)
{
    for (Vertex v = 0; v < hts.graph.num_vertices(); ++v) hts.target[v] = arena_win1.win1.at(hts.arena_state(v));
}

// ---------------------------------------------------------------------------

SrActionMap::SrActionMap(const ProductGame &perceived, const Regions &regions2)
    : perceived_(perceived), regions_(regions2)
{
    const GameGraph &g = perceived_.graph;
    if (regions_.size() != g.num_vertices()) throw logic_error("perceived regions do not match the product");
    allowed_.assign(g.num_moves(), 1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const Player p = g.owner(v);
        if (!regions_.in_win(p, v)) continue;
        std::size_t k = g.move_offset(v);
        for (const Move &m : g.moves(v)) allowed_[k++] = regions_.in_win(p, m.target);
    }
}

bool SrActionMap::allows(Vertex sp, ActionId a) const
{
    const GameGraph &g = perceived_.graph;
    std::size_t k = g.move_offset(sp);
    for (const Move &m : g.moves(sp)) {
        if (m.action == a) return allowed_[k] != 0;
        ++k;
    }
    return false;
}

std::vector<ActionId> SrActionMap::actions(Vertex sp) const
{
    std::vector<ActionId> out;
    const GameGraph &g = perceived_.graph;
    std::size_t k = g.move_offset(sp);
    for (const Move &m : g.moves(sp))
        if (allowed_[k++]) out.push_back(m.action);
    return out;
}

std::vector<ActionId> sr_actions(const ProductGame &perceived, const Regions &regions2, Vertex sp, Player player)
{
    const GameGraph &g = perceived.graph;
    if (sp >= g.num_vertices()) throw input_error("unknown perceived-product state " + std::to_string(sp));
    std::vector<ActionId> out;
    const bool inside = regions2.in_win(player, sp);
    for (const Move &m : g.moves(sp))
        if (!inside || regions2.in_win(player, m.target)) out.push_back(m.action);
    return out;
}

// ---------------------------------------------------------------------------

RestrictedGame build_restricted_game(const Hts &hts, const SrActionMap &sr, Exec exec)
{
    const GameGraph &g = hts.graph;
    const std::size_t n = g.num_vertices();
    if (sr.perceived().graph.num_vertices() * hts.nq() != n)
        throw logic_error("rationalizable-action map does not match the hypergame transition system");

    std::vector<std::uint8_t> keep(g.num_moves(), 1);
    auto decide = [&](std::int64_t iv) {
        const auto v = static_cast<Vertex>(iv);
        if (hts.target[v]) return;
        const Vertex sp = hts.perceived_vertex(v);
        std::size_t k = g.move_offset(v);
        for (const Move &m : g.moves(v)) keep[k++] = sr.allows(sp, m.action);
    };
    const auto count = static_cast<std::int64_t>(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t v = 0; v < count; ++v) decide(v);
    } else {
        for (std::int64_t v = 0; v < count; ++v) decide(v);
    }

    RestrictedGame rg;
    std::vector<std::size_t> offsets(n + 1, 0);
    std::vector<Move> moves;
    moves.reserve(g.num_moves());
    for (Vertex v = 0; v < n; ++v) {
        std::size_t k = g.move_offset(v);
        for (const Move &m : g.moves(v)) {
            if (keep[k++]) moves.push_back(m);
            else rg.removed.emplace_back(v, m);
        }
        offsets[v + 1] = moves.size();
    }
    rg.graph = GameGraph(g.owners(), std::move(offsets), std::move(moves));
    rg.initial = hts.initial;
    rg.target = hts.target;
    rg.fragment = reachable_from(rg.graph, rg.initial);
    return rg;
}

DeceptiveSure solve_deceptive_sure(const RestrictedGame &rg, bool full_space)
{
    const std::size_t n = rg.graph.num_vertices();
    DeceptiveSure out;
    out.domain = full_space ? std::vector<std::uint8_t>(n, 1) : rg.fragment;
    out.win.assign(n, 0);
    out.level.assign(n, -1);
    out.strategy = Strategy(n);

    const Subgraph sub = induced_subgraph(rg.graph, out.domain);
    std::vector<std::uint8_t> target(sub.to_parent.size());
    for (std::size_t i = 0; i < target.size(); ++i) target[i] = rg.target[sub.to_parent[i]];
    const ReachSolution sol = solve_reachability(sub.graph, target);

    for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
        const Vertex v = sub.to_parent[i];
        out.win[v] = sol.regions.win1[i];
        out.level[v] = sol.regions.level[i];
        if (!target[i]) {
            if (auto a = sol.p1(i)) out.strategy.set(v, *a);
        }
    }
    return out;
}

}  // namespace hsyn
