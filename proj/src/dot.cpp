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

#include "hsyn/dot.hpp"

#include <fstream>
#include <sstream>

namespace hsyn {

namespace {

std::string quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

bool flag(const std::vector<std::uint8_t> &mask, Vertex v) { return v < mask.size() && mask[v]; }

void node(std::ostream &os, const std::string &name, Player owner, const DotRegions &r, Vertex v, bool dashed,
          bool initial)
{
    os << "  " << quote(name) << " [shape=" << (owner == Player::one ? "ellipse" : "box");
    std::string style;
    if (flag(r.true_win, v)) {
        os << ", fillcolor=lightblue";
        style = "filled";
    } else if (flag(r.perceived_win, v)) {
        os << ", fillcolor=pink";
        style = "filled";
    }
    if (dashed) style += style.empty() ? "dashed" : ",dashed";
    if (initial) os << ", penwidth=2";
    if (!style.empty()) os << ", style=" << quote(style);
    os << "];\n";
}

void edge(std::ostream &os, const std::string &from, const std::string &to, const std::string &label,
          std::string_view attrs = {})
{
    os << "  " << quote(from) << " -> " << quote(to) << " [label=" << quote(label);
    if (!attrs.empty()) os << ", " << attrs;
    os << "];\n";
}

std::string triple(const Arena &arena, const Hts &hts, Vertex v)
{
    return arena.id(hts.arena_state(v)) + "," + std::to_string(hts.q_of(v)) + "," + std::to_string(hts.p_of(v));
}

}  // namespace

std::string arena_to_dot(const Arena &arena, const DotRegions &regions)
{
    std::ostringstream os;
    os << "digraph arena {\n";
    for (Vertex s = 0; s < arena.num_states(); ++s)
        node(os, arena.id(s), arena.owner(s), regions, s, false, s == arena.initial());
    for (const auto &e : arena.edges()) edge(os, arena.id(e.from), arena.id(e.to), e.action);
    os << "}\n";
    return os.str();
}

std::string product_to_dot(const Arena &arena, const ProductGame &game, const DotRegions &regions)
{
    auto name = [&](Vertex v) { return arena.id(game.arena_state(v)) + "," + std::to_string(game.dfa_state(v)); };
    std::ostringstream os;
    os << "digraph product {\n";
    const GameGraph &g = game.graph;
    for (Vertex v = 0; v < g.num_vertices(); ++v) node(os, name(v), g.owner(v), regions, v, false, v == game.initial);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (const Move &m : g.moves(v)) edge(os, name(v), name(m.target), arena.action_name(m.action));
    os << "}\n";
    return os.str();
}

std::string hts_to_dot(const Arena &arena, const Hts &hts, const DotRegions &regions, const RestrictedGame *rg)
{
    std::ostringstream os;
    os << "digraph hts {\n";
    const GameGraph &g = hts.graph;
    std::vector<std::uint8_t> removed;
    if (rg) {
        removed.assign(g.num_moves(), 0);
        for (const auto &[v, m] : rg->removed) {
            std::size_t k = g.move_offset(v);
            for (const Move &mm : g.moves(v)) {
                if (mm == m) removed[k] = 1;
                ++k;
            }
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!hts.reachable[v]) continue;
        node(os, triple(arena, hts, v), g.owner(v), regions, v, rg && !rg->fragment[v], v == hts.initial);
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!hts.reachable[v]) continue;
        std::size_t k = g.move_offset(v);
        for (const Move &m : g.moves(v)) {
            const bool cut = rg && removed[k++];
            edge(os, triple(arena, hts, v), triple(arena, hts, m.target), arena.action_name(m.action),
                 cut ? "color=red, style=dashed" : "");
        }
    }
    os << "}\n";
    return os.str();
}

std::string stochastic_to_dot(const Arena &arena, const Hts &hts, const StochasticGame &g, const DotRegions &regions)
{
    std::ostringstream os;
    os << "digraph stochastic {\n";
    for (Vertex i = 0; i < g.size(); ++i) {
        const Vertex v = g.to_hts[i];
        node(os, triple(arena, hts, v), g.graph.owner(i), regions, v, false, i == g.initial);
    }
    for (Vertex i = 0; i < g.size(); ++i) {
        for (const Move &m : g.graph.moves(i)) {
            edge(os, triple(arena, hts, g.to_hts[i]), triple(arena, hts, g.to_hts[m.target]),
                 arena.action_name(m.action), g.is_choice(i) ? "" : "style=dotted");
        }
    }
    os << "}\n";
    return os.str();
}

void write_text_file(const std::string &path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw input_error("failed writing '" + path + "'");
}

}  // namespace hsyn
