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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hsyn/common.hpp"
#include "hsyn/game_graph.hpp"
#include "hsyn/speclang.hpp"

namespace hsyn {

/// Which labeling function drives the automaton: the true one (L1) or the
/// adversary's perceived one (L2).
enum class Labeling { truth, perceived };

struct ArenaEdge
{
    Vertex from;
    Vertex to;
    std::string action;

    friend bool operator==(const ArenaEdge &, const ArenaEdge &) = default;
};

/// Unvalidated arena description; turned into an Arena by make_arena().
struct ArenaSpec
{
    struct State
    {
        std::string id;
        Player owner;
    };
    struct Edge
    {
        std::string from;
        std::string to;
        std::optional<std::string> action;  // defaults to "from->to"
    };

    std::vector<State> states;
    std::string initial;
    std::vector<std::string> props;
    std::vector<Edge> edges;
    std::vector<std::pair<std::string, std::vector<std::string>>> label_true;
    std::vector<std::pair<std::string, std::vector<std::string>>> label_perceived;
};

/**
 * Turn-based deterministic two-player arena with a true and a perceived
 * labeling. Immutable once built. Edges are grouped by source state and
 * sorted by action name within a group; the position of an edge in edges()
 * is its ActionId.
 */
class Arena
{
  public:
    std::size_t num_states() const { return ids_.size(); }
    const std::string &id(Vertex s) const { return ids_[s]; }
    Player owner(Vertex s) const { return owner_[s]; }
    Vertex initial() const { return initial_; }
    const std::vector<std::string> &props() const { return props_; }

    Symbol label(Labeling which, Vertex s) const
    {
        return which == Labeling::truth ? label_true_[s] : label_perceived_[s];
    }

    std::span<const ArenaEdge> edges() const { return edges_; }
    const ArenaEdge &edge(ActionId a) const { return edges_[a]; }
    const std::string &action_name(ActionId a) const { return edges_[a].action; }
    /// Edges leaving `s`; their ActionIds are first_edge(s) + i.
    std::span<const ArenaEdge> out_edges(Vertex s) const
    {
        return {edges_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
    }
    ActionId first_edge(Vertex s) const { return static_cast<ActionId>(offsets_[s]); }

    /// Throws on an unknown id.
    Vertex index_of(std::string_view id) const;
    std::optional<Vertex> find(std::string_view id) const;

    /// The arena viewed as a game graph (vertex = arena state).
    GameGraph as_game() const;

    ArenaSpec to_spec() const;

    friend bool operator==(const Arena &, const Arena &) = default;

  private:
    friend Arena make_arena(const ArenaSpec &spec);

    std::vector<std::string> ids_;
    std::vector<Player> owner_;
    Vertex initial_ = 0;
    std::vector<std::string> props_;
    std::vector<ArenaEdge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Symbol> label_true_;
    std::vector<Symbol> label_perceived_;
};

/// Validates and builds; throws Error(input) on any well-formedness
/// violation (unknown state, nondeterminism, dead end, undeclared label).
Arena make_arena(const ArenaSpec &spec);

/// Action names enabled at state `id`, in action order.
std::vector<std::string> enabled_actions(const Arena &arena, std::string_view id);

struct FormulaObjective
{
    std::string text;
    Formula formula;
};

using Objective = std::variant<FormulaObjective, Dfa>;

struct HypergameInput
{
    Arena arena;
    Objective objective;
};

/// Parses and validates the JSON input document.
HypergameInput load_arena(std::string_view document);
HypergameInput load_arena_file(const std::string &path);

/// Serializes back to the JSON document schema (pretty-printed).
std::string dump_input(const HypergameInput &input);

/// The objective automaton: compiled from the formula, or the explicit DFA.
Dfa objective_dfa(const HypergameInput &input, std::size_t state_cap = kDefaultDfaStateCap);

}  // namespace hsyn
