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

#include "hsyn/game_graph.hpp"

#include <cassert>

namespace hsyn {

GameGraph::GameGraph(std::vector<Player> owner, std::vector<std::size_t> offsets, std::vector<Move> moves)
    : owner_(std::move(owner)), offsets_(std::move(offsets)), moves_(std::move(moves))
{
    if (offsets_.size() != owner_.size() + 1 || offsets_.back() != moves_.size())
        throw logic_error("malformed game graph offsets");
}

ReverseGraph reverse(const GameGraph &g)
{
    const std::size_t n = g.num_vertices();
    ReverseGraph r;
    r.offsets.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        for (const Move &m : g.moves(v)) ++r.offsets[m.target + 1];
    for (std::size_t i = 0; i < n; ++i) r.offsets[i + 1] += r.offsets[i];
    r.sources.resize(g.num_moves());
    std::vector<std::size_t> fill(r.offsets.begin(), r.offsets.end() - 1);
    for (Vertex v = 0; v < n; ++v)
        for (const Move &m : g.moves(v)) r.sources[fill[m.target]++] = v;
    return r;
}

std::vector<std::uint8_t> reachable_from(const GameGraph &g, Vertex root)
{
    std::vector<std::uint8_t> seen(g.num_vertices(), 0);
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (const Move &m : g.moves(v)) {
            if (!seen[m.target]) {
                seen[m.target] = 1;
                stack.push_back(m.target);
            }
        }
    }
    return seen;
}

Subgraph induced_subgraph(const GameGraph &g, std::span<const std::uint8_t> mask)
{
    assert(mask.size() == g.num_vertices());
    Subgraph sub;
    sub.from_parent.assign(g.num_vertices(), -1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (mask[v]) {
            sub.from_parent[v] = static_cast<std::int64_t>(sub.to_parent.size());
            sub.to_parent.push_back(v);
        }
    }
    std::vector<Player> owner;
    std::vector<std::size_t> offsets{0};
    std::vector<Move> moves;
    owner.reserve(sub.to_parent.size());
    for (Vertex pv : sub.to_parent) {
        owner.push_back(g.owner(pv));
        for (const Move &m : g.moves(pv)) {
            if (sub.from_parent[m.target] >= 0)
                moves.push_back({static_cast<Vertex>(sub.from_parent[m.target]), m.action});
        }
        offsets.push_back(moves.size());
    }
    sub.graph = GameGraph(std::move(owner), std::move(offsets), std::move(moves));
    return sub;
}

}  // namespace hsyn
