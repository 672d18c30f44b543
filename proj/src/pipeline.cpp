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

#include "hsyn/pipeline.hpp"

namespace hsyn {

Synthesis synthesize(const HypergameInput &input, const SynthesisOptions &opts)
{
    const Arena &arena = input.arena;
    Synthesis s;
    s.dfa = objective_dfa(input, opts.dfa_cap);
    s.true_game = build_product(arena, Labeling::truth, s.dfa, opts.exec);
    s.true_solution = solve_reachability(s.true_game.graph, s.true_game.target);
    s.perceived_game = build_product(arena, Labeling::perceived, s.dfa, opts.exec);
    s.perceived_solution = solve_reachability(s.perceived_game.graph, s.perceived_game.target);
    if (arena_marking_applicable(s.dfa)) {
        s.true_marking = solve_arena_marking(arena, s.dfa, Labeling::truth);
        s.perceived_marking = solve_arena_marking(arena, s.dfa, Labeling::perceived);
    }

    s.sr = SrActionMap(s.perceived_game, s.perceived_solution.regions);
    s.hts = build_hts(arena, s.dfa, s.true_solution.regions, opts.exec);
    if (opts.target == TargetMode::arena_marking) {
        if (!s.true_marking)
            throw input_error("arena-level target marking needs an objective decided by the label of a single state");
        retarget_to_arena(s.hts, s.true_marking->solution.regions);
    }
    s.rg = build_restricted_game(s.hts, s.sr, opts.exec);
    return s;
}

}  // namespace hsyn
