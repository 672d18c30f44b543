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

#include "hsyn/almostsure.hpp"
#include "hsyn/arena.hpp"
#include "hsyn/hypergame.hpp"
#include "hsyn/product.hpp"
#include "hsyn/reachsolver.hpp"

namespace hsyn {

/// Where the hypergame target comes from.
enum class TargetMode {
    true_region,    // {(s,q,p) | (s,q) in P1's region of the true product}
    arena_marking,  // {(s,q,p) | s in P1's region of the arena-level marking solve}
};

struct SynthesisOptions
{
    TargetMode target = TargetMode::true_region;
    bool full_space = false;
    std::size_t dfa_cap = kDefaultDfaStateCap;
    Exec exec = Exec::parallel;
};

/// Everything up to and including the restricted game.
struct Synthesis
{
    Dfa dfa;
    ProductGame true_game;
    ReachSolution true_solution;
    ProductGame perceived_game;
    ReachSolution perceived_solution;
    std::optional<ArenaMarking> true_marking;
    std::optional<ArenaMarking> perceived_marking;
    SrActionMap sr;
    Hts hts;
    RestrictedGame rg;
};

Synthesis synthesize(const HypergameInput &input, const SynthesisOptions &opts = {});

}  // namespace hsyn
