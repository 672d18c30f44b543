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

#include "hsyn/reachsolver.hpp"

#include <deque>

namespace hsyn {

ReachSolution solve_reachability(const GameGraph &g, std::span<const std::uint8_t> target)
{
    const std::size_t n = g.num_vertices();
    if (target.size() != n) throw logic_error("target mask size does not match the game");

    ReachSolution sol;
    auto &win = sol.regions.win1;
    auto &level = sol.regions.level;
    win.assign(n, 0);
    level.assign(n, -1);

    const ReverseGraph rev = reverse(g);
    std::vector<std::size_t> remaining(n);
    std::deque<Vertex> queue;

    for (Vertex v = 0; v < n; ++v) {
        remaining[v] = g.out_degree(v);
        if (target[v]) {
            win[v] = 1;
            level[v] = 0;
            queue.push_back(v);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!win[v] && g.owner(v) == Player::two && g.out_degree(v) == 0) {
            win[v] = 1;
            level[v] = 1;
            queue.push_back(v);
        }
    }

    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : rev.preds(u)) {
            if (win[v]) continue;
            if (g.owner(v) == Player::two && --remaining[v] != 0) continue;
            win[v] = 1;
            level[v] = level[u] + 1;
            queue.push_back(v);
        }
    }

    sol.p1 = Strategy(n);
    sol.p2 = Strategy(n);
    for (Vertex v = 0; v < n; ++v) {
        const auto moves = g.moves(v);
        if (g.owner(v) == Player::one && win[v]) {
            for (const Move &m : moves) {
                const bool ok = target[v] ? win[m.target] != 0 : (win[m.target] && level[m.target] < level[v]);
                if (ok) {
                    sol.p1.set(v, m.action);
                    break;
                }
            }
            if (target[v] && !sol.p1.defined(v) && !moves.empty()) sol.p1.set(v, moves.front().action);
        } else if (g.owner(v) == Player::two && !win[v]) {
            for (const Move &m : moves) {
                if (!win[m.target]) {
                    sol.p2.set(v, m.action);
                    break;
                }
            }
        }
    }
    return sol;
}

ReachSolution solve_reachability(const GameGraph &g, std::span<const Vertex> target)
{
    std::vector<std::uint8_t> mask(g.num_vertices(), 0);
    for (Vertex v : target) {
        if (v >= mask.size()) throw input_error("target vertex " + std::to_string(v) + " is not a game state");
        mask[v] = 1;
    }
    return solve_reachability(g, mask);
}

std::optional<Vertex> successor(const GameGraph &g, Vertex v, ActionId a)
{
    for (const Move &m : g.moves(v))
        if (m.action == a) return m.target;
    return std::nullopt;
}

Strategy complete_strategy(const GameGraph &g, Strategy s, Player p)
{
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.owner(v) == p && !s.defined(v) && g.out_degree(v) > 0) s.set(v, g.moves(v).front().action);
    }
    return s;
}

}  // namespace hsyn
