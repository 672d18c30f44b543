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
#include "hsyn/game_graph.hpp"
#include "hsyn/speclang.hpp"

namespace hsyn {

/// Arena x DFA synchronous product under one labeling. Vertex (s, q) is
/// stored at index s * num_dfa_states + q; the whole space S x Q is built.
struct ProductGame
{
    GameGraph graph;
    std::size_t num_dfa_states = 0;
    Vertex initial = 0;
    std::vector<std::uint8_t> target;  // S x F
    Labeling labeling = Labeling::truth;

    Vertex vertex(Vertex s, std::uint32_t q) const { return static_cast<Vertex>(s * num_dfa_states + q); }
    Vertex arena_state(Vertex v) const { return static_cast<Vertex>(v / num_dfa_states); }
    std::uint32_t dfa_state(Vertex v) const { return static_cast<std::uint32_t>(v % num_dfa_states); }
};

/// Throws Error(logic) when the DFA's proposition list differs from the
/// arena's.
ProductGame build_product(const Arena &arena, Labeling which, const Dfa &dfa, Exec exec = Exec::parallel);

}  // namespace hsyn
