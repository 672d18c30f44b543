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

#include "hsyn/almostsure.hpp"

#include <algorithm>

namespace hsyn {

StochasticGame build_stochastic_game(const RestrictedGame &rg, bool full_space)
{
    const std::size_t n = rg.graph.num_vertices();
    const std::vector<std::uint8_t> domain = full_space ? std::vector<std::uint8_t>(n, 1) : rg.fragment;
    Subgraph sub = induced_subgraph(rg.graph, domain);

    StochasticGame g;
    g.to_hts = std::move(sub.to_parent);
    g.from_hts = std::move(sub.from_parent);
    g.sink.resize(g.to_hts.size());
    std::vector<std::size_t> offsets{0};
    std::vector<Move> moves;
    for (Vertex i = 0; i < g.to_hts.size(); ++i) {
        g.sink[i] = rg.target[g.to_hts[i]];
        if (!g.sink[i]) {
            const auto ms = sub.graph.moves(i);
            moves.insert(moves.end(), ms.begin(), ms.end());
        }
        offsets.push_back(moves.size());
    }
    g.graph = GameGraph(sub.graph.owners(), std::move(offsets), std::move(moves));
    if (g.from_hts[rg.initial] >= 0) g.initial = static_cast<Vertex>(g.from_hts[rg.initial]);
    return g;
}

StochasticGame build_stochastic_game(const Hts &hts, const SrActionMap &sr, bool full_space)
{
    return build_stochastic_game(build_restricted_game(hts, sr), full_space);
}

namespace {

inline std::uint8_t pre_one(Vertex v, std::span<const std::uint8_t> y, std::span<const std::uint8_t> x,
                            const GameGraph &g)
{
    if (!x[v]) return 0;
    const auto moves = g.moves(v);
    if (g.owner(v) == Player::one) {
        for (const Move &m : moves)
            if (y[m.target]) return 1;
        return 0;
    }
    bool hits = false;
    for (const Move &m : moves) {
        if (!x[m.target]) return 0;
        hits = hits || y[m.target];
    }
    return hits;
}

}  // namespace

std::vector<std::uint8_t> pre_step(std::span<const std::uint8_t> y, std::span<const std::uint8_t> x,
                                   const StochasticGame &g, Exec exec)
{
    const std::size_t n = g.size();
    if (y.size() != n || x.size() != n) throw logic_error("pre_step masks do not match the game");
    std::vector<std::uint8_t> out(n, 0);
    const auto count = static_cast<std::int64_t>(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t v = 0; v < count; ++v) out[v] = pre_one(static_cast<Vertex>(v), y, x, g.graph);
    } else {
        for (std::int64_t v = 0; v < count; ++v) out[v] = pre_one(static_cast<Vertex>(v), y, x, g.graph);
    }
    return out;
}

AswResult solve_asw(const StochasticGame &g, Exec exec)
{
    const std::size_t n = g.size();
    AswResult r;
    std::vector<std::uint8_t> x(n, 1);
    std::vector<std::vector<std::uint8_t>> levels;

    for (;;) {
        r.outer_sizes.push_back(static_cast<std::size_t>(std::count(x.begin(), x.end(), 1)));
        levels.clear();
        std::vector<std::uint8_t> y(n);
        for (std::size_t v = 0; v < n; ++v) y[v] = g.sink[v] && x[v];
        levels.push_back(y);
        for (;;) {
            auto next = pre_step(y, x, g, exec);
            bool grew = false;
            for (std::size_t v = 0; v < n; ++v) {
                next[v] = (next[v] || y[v]) && x[v];
                grew = grew || (next[v] && !y[v]);
            }
            if (!grew) break;
            y = std::move(next);
            levels.push_back(y);
        }
        if (y == x) break;
        x = std::move(y);
    }

    r.region = x;
    r.y = std::move(levels);
    r.rank.assign(n, -1);
    for (std::size_t i = r.y.size(); i-- > 0;)
        for (std::size_t v = 0; v < n; ++v)
            if (r.y[i][v]) r.rank[v] = static_cast<std::int64_t>(i);

    r.strategy = Strategy(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!g.is_choice(v) || g.sink[v] || r.rank[v] <= 0) continue;
        const auto &prev = r.y[r.rank[v] - 1];
        for (const Move &m : g.graph.moves(v)) {
            if (prev[m.target]) {
                r.strategy.set(v, m.action);
                break;
            }
        }
    }
    return r;
}

}  // namespace hsyn
