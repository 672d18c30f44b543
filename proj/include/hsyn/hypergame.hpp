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

#include <vector>

#include "hsyn/arena.hpp"
#include "hsyn/product.hpp"
#include "hsyn/reachsolver.hpp"

namespace hsyn {

/**
 * Hypergame transition system over S x Q x Q. The q component follows the
 * true labeling and p the perceived one. Vertex (s, q, p) is stored at
 * (s * |Q| + q) * |Q| + p.
 */
struct Hts
{
    GameGraph graph;
    std::size_t num_dfa_states = 0;
    Vertex initial = 0;
    std::vector<std::uint8_t> target;     // states where P1 already wins the true game
    std::vector<std::uint8_t> reachable;  // forward closure of `initial` under the full transition

    std::size_t nq() const { return num_dfa_states; }
    Vertex vertex(Vertex s, std::uint32_t q, std::uint32_t p) const
    {
        return static_cast<Vertex>((s * nq() + q) * nq() + p);
    }
    Vertex arena_state(Vertex v) const { return static_cast<Vertex>(v / (nq() * nq())); }
    std::uint32_t q_of(Vertex v) const { return static_cast<std::uint32_t>((v / nq()) % nq()); }
    std::uint32_t p_of(Vertex v) const { return static_cast<std::uint32_t>(v % nq()); }
    /// (s, q) in the true product.
    Vertex true_vertex(Vertex v) const { return static_cast<Vertex>(v / nq()); }
    /// (s, p) in the perceived product.
    Vertex perceived_vertex(Vertex v) const { return static_cast<Vertex>(arena_state(v) * nq() + p_of(v)); }
};

/// Upper bound on |S| * |Q|^2 accepted by build_hts.
constexpr std::size_t kMaxHtsStates = std::size_t{1} << 26;

/// Target = {(s, q, p) | (s, q) in win1 of `win11`}, which must be the
/// regions of the true-labeling product over the same DFA.
Hts build_hts(const Arena &arena, const Dfa &dfa, const Regions &win11, Exec exec = Exec::parallel);

/**
 * Arena-level solve used when the objective is decided by the label of a
 * single state: marks {s | delta(init, L(s)) in F} and solves reachability
 * on the bare arena. Applicable only when every reachable non-accepting DFA
 * state accepts on exactly the symbols the initial state accepts on (checked;
 * throws otherwise), so a run accepts iff it visits a marked state.
 */
struct ArenaMarking
{
    std::vector<std::uint8_t> marked;
    ReachSolution solution;
};

bool arena_marking_applicable(const Dfa &dfa);
ArenaMarking solve_arena_marking(const Arena &arena, const Dfa &dfa, Labeling which);

/// Replaces the HTS target with {(s, q, p) | s in arena_win1}.
void retarget_to_arena(Hts &hts, const Regions &arena_win1);

/**
 * Subjectively rationalizable actions of the owner at each perceived-product
 * state: inside the owner's perceived winning region only the moves that
 * stay in it; elsewhere every enabled move.
 */
class SrActionMap
{
  public:
    SrActionMap() = default;
    SrActionMap(const ProductGame &perceived, const Regions &regions2);

    bool allows(Vertex sp, ActionId a) const;
    std::vector<ActionId> actions(Vertex sp) const;
    const ProductGame &perceived() const { return perceived_; }
    const Regions &regions() const { return regions_; }

  private:
    ProductGame perceived_;
    Regions regions_;
    std::vector<std::uint8_t> allowed_;  // per flat move of the perceived product
};

/// The rationalizable action set of `player` at perceived state `sp`,
/// whether or not `player` owns it.
std::vector<ActionId> sr_actions(const ProductGame &perceived, const Regions &regions2, Vertex sp, Player player);

/// HTS with non-rationalizable moves pruned outside the target. Removed
/// moves are recorded; `fragment` is the forward closure of the initial
/// state under the pruned transition.
struct RestrictedGame
{
    GameGraph graph;
    Vertex initial = 0;
    std::vector<std::uint8_t> target;
    std::vector<std::uint8_t> fragment;
    std::vector<std::pair<Vertex, Move>> removed;
};

RestrictedGame build_restricted_game(const Hts &hts, const SrActionMap &sr, Exec exec = Exec::parallel);

/// Deceptive sure-winning result in HTS vertex space. `domain` marks the
/// states that were solved (fragment or full space). The strategy is
/// defined on P1 states of `win` outside the target.
struct DeceptiveSure
{
    std::vector<std::uint8_t> domain;
    std::vector<std::uint8_t> win;
    std::vector<std::int64_t> level;
    Strategy strategy;
};

DeceptiveSure solve_deceptive_sure(const RestrictedGame &rg, bool full_space = false);

}  // namespace hsyn
