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

#include <optional>
#include <span>
#include <vector>

#include "hsyn/game_graph.hpp"

namespace hsyn {

/// Memoryless deterministic strategy: at most one action per vertex.
class Strategy
{
  public:
    Strategy() = default;
    explicit Strategy(std::size_t n) : action_(n, -1) {}

    std::optional<ActionId> operator()(Vertex v) const
    {
        if (v >= action_.size() || action_[v] < 0) return std::nullopt;
        return static_cast<ActionId>(action_[v]);
    }
    bool defined(Vertex v) const { return v < action_.size() && action_[v] >= 0; }
    void set(Vertex v, ActionId a) { action_[v] = a; }
    void clear(Vertex v) { action_[v] = -1; }
    std::size_t size() const { return action_.size(); }

    friend bool operator==(const Strategy &, const Strategy &) = default;

  private:
    std::vector<std::int64_t> action_;
};

/// Determinacy partition of a reachability game. `level` is the attractor
/// rank of each win1 vertex (0 on the target) and -1 on win2.
struct Regions
{
    std::vector<std::uint8_t> win1;
    std::vector<std::int64_t> level;

    bool in_win1(Vertex v) const { return win1[v] != 0; }
    bool in_win2(Vertex v) const { return win1[v] == 0; }
    bool in_win(Player p, Vertex v) const { return p == Player::one ? in_win1(v) : in_win2(v); }
    std::size_t size() const { return win1.size(); }
};

struct ReachSolution
{
    Regions regions;
    Strategy p1;  // level-decreasing on win1 \ target; stays in win1 on target when possible
    Strategy p2;  // stays in win2
};

/**
 * Attractor computation for the reaching player P1 by backward induction
 * with successor counters; linear in vertices plus moves. A P2 vertex with
 * no move counts as lost by P2, a P1 vertex with no move as lost by P1.
 * Ties between qualifying moves go to the first move in vertex order.
 */
ReachSolution solve_reachability(const GameGraph &g, std::span<const std::uint8_t> target);

/// Same, with the target given as a vertex list (throws on unknown vertex).
ReachSolution solve_reachability(const GameGraph &g, std::span<const Vertex> target);

/// Successor of `v` under action `a`, if `a` is enabled there.
std::optional<Vertex> successor(const GameGraph &g, Vertex v, ActionId a);

/// Copy of `s` made total on the vertices of `p`: undefined entries get the
/// first enabled move.
Strategy complete_strategy(const GameGraph &g, Strategy s, Player p = Player::one);

}  // namespace hsyn
