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

#include <span>
#include <vector>

#include "hsyn/hypergame.hpp"

namespace hsyn {

/**
 * One-player stochastic game over (a fragment of) the HTS. P1-owned
 * vertices are choice states; P2-owned vertices are probabilistic states
 * whose moves form the support of an unknown positive distribution. Sink
 * vertices (the target) have no moves.
 */
struct StochasticGame
{
    GameGraph graph;  // local vertex ids
    std::vector<std::uint8_t> sink;
    std::vector<Vertex> to_hts;
    std::vector<std::int64_t> from_hts;
    Vertex initial = 0;  // local id of the HTS initial state

    std::size_t size() const { return graph.num_vertices(); }
    bool is_choice(Vertex v) const { return graph.owner(v) == Player::one; }

    friend bool operator==(const StochasticGame &, const StochasticGame &) = default;
};

/// Built from the rationalizable-action restriction; by default only the
/// forward fragment of the initial state under that restriction.
StochasticGame build_stochastic_game(const RestrictedGame &rg, bool full_space = false);
StochasticGame build_stochastic_game(const Hts &hts, const SrActionMap &sr, bool full_space = false);

/**
 * {v in choice states of X | some move into Y}
 *   u {v in probabilistic states of X | all moves in X, some move into Y}
 *
 * Masks are indexed by local vertex. Serial reference and OpenMP kernel
 * produce identical results.
 */
std::vector<std::uint8_t> pre_step(std::span<const std::uint8_t> y, std::span<const std::uint8_t> x,
                                   const StochasticGame &g, Exec exec = Exec::parallel);

struct AswResult
{
    std::vector<std::uint8_t> region;          // X*
    std::vector<std::vector<std::uint8_t>> y;  // Y_0 .. Y_k computed with X = X*
    std::vector<std::int64_t> rank;            // i with v in Y_i \ Y_{i-1}; -1 outside X*
    Strategy strategy;                         // on choice states of X* outside the sink
    std::vector<std::size_t> outer_sizes;      // |X_0|, |X_1|, ...

    std::size_t num_levels() const { return y.size(); }
};

AswResult solve_asw(const StochasticGame &g, Exec exec = Exec::parallel);

}  // namespace hsyn
