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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hsyn/common.hpp"

namespace hsyn {

struct Move
{
    Vertex target;
    ActionId action;

    friend bool operator==(const Move &, const Move &) = default;
};

/**
 * Turn-based game graph in compressed sparse row form. The moves of a vertex
 * are stored in the order the builder supplied them; every builder in this
 * library emits them sorted by action name so "first qualifying move" is the
 * lexicographically smallest action.
 */
class GameGraph
{
  public:
    GameGraph() = default;
    GameGraph(std::vector<Player> owner, std::vector<std::size_t> offsets, std::vector<Move> moves);

    std::size_t num_vertices() const { return owner_.size(); }
    std::size_t num_moves() const { return moves_.size(); }
    Player owner(Vertex v) const { return owner_[v]; }
    std::span<const Move> moves(Vertex v) const
    {
        return {moves_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t out_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    /// Index of the first move of `v` in the flat move array.
    std::size_t move_offset(Vertex v) const { return offsets_[v]; }

    const std::vector<Player> &owners() const { return owner_; }

    friend bool operator==(const GameGraph &, const GameGraph &) = default;

  private:
    std::vector<Player> owner_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Move> moves_;
};

/// Predecessor lists in CSR form.
struct ReverseGraph
{
    std::vector<std::size_t> offsets;
    std::vector<Vertex> sources;

    std::span<const Vertex> preds(Vertex v) const
    {
        return {sources.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

ReverseGraph reverse(const GameGraph &g);

/// Vertices reachable from `root` (inclusive); returned as a 0/1 mask.
std::vector<std::uint8_t> reachable_from(const GameGraph &g, Vertex root);

/// Induced subgraph over the vertices with mask[v] != 0. Moves leaving the
/// mask are dropped. `to_parent[i]` maps a subgraph vertex back.
struct Subgraph
{
    GameGraph graph;
    std::vector<Vertex> to_parent;
    std::vector<std::int64_t> from_parent;  // -1 when outside the mask
};

Subgraph induced_subgraph(const GameGraph &g, std::span<const std::uint8_t> mask);

}  // namespace hsyn
