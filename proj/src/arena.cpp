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

#include "hsyn/arena.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace hsyn {

using json = nlohmann::json;

Arena make_arena(const ArenaSpec &spec)
{
    Arena a;
    if (spec.states.empty()) throw input_error("arena has no states");

    std::unordered_map<std::string, Vertex> index;
    for (const auto &st : spec.states) {
        if (!index.try_emplace(st.id, static_cast<Vertex>(a.ids_.size())).second)
            throw input_error("duplicate state id '" + st.id + "'");
        a.ids_.push_back(st.id);
        a.owner_.push_back(st.owner);
    }
    auto lookup = [&](const std::string &id, const char *what) {
        auto it = index.find(id);
        if (it == index.end()) throw input_error(std::string(what) + " references unknown state '" + id + "'");
        return it->second;
    };
    a.initial_ = lookup(spec.initial, "init");

    std::set<std::string> seen_props;
    for (const auto &p : spec.props)
        if (!seen_props.insert(p).second) throw input_error("duplicate proposition '" + p + "'");
    if (spec.props.size() > kMaxPropositions)
        throw input_error("at most " + std::to_string(kMaxPropositions) + " atomic propositions are supported");
    a.props_ = spec.props;

    for (const auto &e : spec.edges) {
        const Vertex from = lookup(e.from, "edge");
        const Vertex to = lookup(e.to, "edge");
        a.edges_.push_back({from, to, e.action.value_or(e.from + "->" + e.to)});
    }
    std::stable_sort(a.edges_.begin(), a.edges_.end(), [](const ArenaEdge &x, const ArenaEdge &y) {
        return x.from != y.from ? x.from < y.from : x.action < y.action;
    });

    a.offsets_.assign(a.ids_.size() + 1, 0);
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto &e = a.edges_[i];
        if (i > 0 && a.edges_[i - 1].from == e.from && a.edges_[i - 1].action == e.action)
            throw input_error("nondeterministic transition: state '" + a.ids_[e.from] + "' has action '" + e.action
                              + "' more than once");
        ++a.offsets_[e.from + 1];
    }
    for (std::size_t s = 0; s < a.ids_.size(); ++s) {
        if (a.offsets_[s + 1] == 0) throw input_error("state '" + a.ids_[s] + "' has no enabled action");
        a.offsets_[s + 1] += a.offsets_[s];
    }

    auto fill_labels = [&](const auto &entries, std::vector<Symbol> &out, const char *what) {
        out.assign(a.ids_.size(), 0);
        for (const auto &[id, names] : entries) {
            const Vertex s = lookup(id, what);
            for (const auto &n : names) {
                auto it = std::find(a.props_.begin(), a.props_.end(), n);
                if (it == a.props_.end())
                    throw input_error(std::string(what) + " of state '" + id + "' uses undeclared proposition '" + n
                                      + "'");
                out[s] |= Symbol{1} << (it - a.props_.begin());
            }
        }
    };
    fill_labels(spec.label_true, a.label_true_, "label_true");
    fill_labels(spec.label_perceived, a.label_perceived_, "label_perceived");
    return a;
}

std::optional<Vertex> Arena::find(std::string_view id) const
{
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return static_cast<Vertex>(it - ids_.begin());
}

Vertex Arena::index_of(std::string_view id) const
{
    if (auto s = find(id)) return *s;
    throw input_error("unknown state '" + std::string(id) + "'");
}

GameGraph Arena::as_game() const
{
    std::vector<Move> moves;
    moves.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) moves.push_back({edges_[i].to, static_cast<ActionId>(i)});
    return GameGraph(owner_, offsets_, std::move(moves));
}

ArenaSpec Arena::to_spec() const
{
    ArenaSpec spec;
    for (std::size_t s = 0; s < ids_.size(); ++s) spec.states.push_back({ids_[s], owner_[s]});
    spec.initial = ids_[initial_];
    spec.props = props_;
    for (const auto &e : edges_) spec.edges.push_back({ids_[e.from], ids_[e.to], e.action});
    for (std::size_t s = 0; s < ids_.size(); ++s) {
        if (label_true_[s]) spec.label_true.emplace_back(ids_[s], names_of(label_true_[s], props_));
        if (label_perceived_[s]) spec.label_perceived.emplace_back(ids_[s], names_of(label_perceived_[s], props_));
    }
    return spec;
}

std::vector<std::string> enabled_actions(const Arena &arena, std::string_view id)
{
    std::vector<std::string> out;
    for (const auto &e : arena.out_edges(arena.index_of(id))) out.push_back(e.action);
    return out;
}

// ---------------------------------------------------------------------------
// JSON document

namespace {

std::string id_string(const json &v, const char *what)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw input_error(std::string(what) + " must be a string or an integer");
}

const json &require(const json &obj, const char *key, const char *where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw input_error(std::string("missing field '") + key + "' in " + where);
    return obj.at(key);
}

std::vector<std::string> string_array(const json &v, const char *what)
{
    if (!v.is_array()) throw input_error(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto &x : v) out.push_back(id_string(x, what));
    return out;
}

std::vector<std::pair<std::string, std::vector<std::string>>> label_map(const json &doc, const char *key)
{
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    if (!doc.contains(key)) return out;
    const json &m = doc.at(key);
    if (!m.is_object()) throw input_error(std::string(key) + " must be an object");
    for (auto it = m.begin(); it != m.end(); ++it) out.emplace_back(it.key(), string_array(it.value(), key));
    return out;
}

Dfa parse_dfa(const json &j, const std::vector<std::string> &props)
{
    Dfa d;
    d.props = props;
    d.state_names = string_array(require(j, "states", "dfa"), "dfa.states");
    if (d.state_names.empty()) throw input_error("dfa.states is empty");
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < d.state_names.size(); ++i)
        if (!index.emplace(d.state_names[i], i).second)
            throw input_error("duplicate DFA state '" + d.state_names[i] + "'");
    auto lookup = [&](const json &v, const char *what) {
        auto name = id_string(v, what);
        auto it = index.find(name);
        if (it == index.end()) throw input_error(std::string(what) + " references unknown DFA state '" + name + "'");
        return it->second;
    };
    d.initial = lookup(require(j, "initial", "dfa"), "dfa.initial");
    d.accepting.assign(d.state_names.size(), false);
    for (const auto &v : require(j, "accepting", "dfa")) d.accepting[lookup(v, "dfa.accepting")] = true;

    if (props.size() > kMaxPropositions) throw input_error("too many propositions for an explicit DFA");
    const std::size_t alpha = d.alphabet_size();
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    d.delta.assign(d.state_names.size() * alpha, unset);
    const json &trans = require(j, "transitions", "dfa");
    if (!trans.is_array()) throw input_error("dfa.transitions must be an array");
    for (const auto &t : trans) {
        const auto from = lookup(require(t, "from", "dfa transition"), "dfa transition");
        const auto to = lookup(require(t, "to", "dfa transition"), "dfa transition");
        const Symbol sym = symbol_of(string_array(require(t, "symbol", "dfa transition"), "symbol"), props);
        auto &slot = d.delta[from * alpha + sym];
        if (slot != unset && slot != to)
            throw input_error("DFA transition from '" + d.state_names[from] + "' is nondeterministic");
        slot = to;
    }
    // Accepting states are absorbing; missing moves out of them are self-loops.
    for (std::uint32_t q = 0; q < d.state_names.size(); ++q) {
        for (Symbol s = 0; s < alpha; ++s) {
            auto &slot = d.delta[q * alpha + s];
            if (slot != unset) continue;
            if (!d.accepting[q])
                throw input_error("DFA transition from '" + d.state_names[q] + "' on {"
                                  + [&] {
                                        std::string out;
                                        for (const auto &n : names_of(s, props)) out += (out.empty() ? "" : ",") + n;
                                        return out;
                                    }()
                                  + "} is missing");
            slot = q;
        }
    }
    validate_dfa(d);
    return d;
}

json dfa_to_json(const Dfa &d)
{
    json j;
    j["states"] = d.state_names;
    j["initial"] = d.state_names[d.initial];
    json acc = json::array();
    for (std::size_t q = 0; q < d.num_states(); ++q)
        if (d.accepting[q]) acc.push_back(d.state_names[q]);
    j["accepting"] = acc;
    json trans = json::array();
    for (std::uint32_t q = 0; q < d.num_states(); ++q)
        for (Symbol s = 0; s < d.alphabet_size(); ++s)
            trans.push_back({{"from", d.state_names[q]},
                             {"symbol", names_of(s, d.props)},
                             {"to", d.state_names[d.step(q, s)]}});
    j["transitions"] = trans;
    return j;
}

}  // namespace

HypergameInput load_arena(std::string_view document)
{
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error &e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("input document must be a JSON object");

    try {
        ArenaSpec spec;
        const json &states = require(doc, "states", "document");
        if (!states.is_array()) throw input_error("states must be an array");
        for (const auto &st : states) {
            const int player = require(st, "player", "state").get<int>();
            if (player != 1 && player != 2) throw input_error("state player must be 1 or 2");
            spec.states.push_back({id_string(require(st, "id", "state"), "state id"),
                                   player == 1 ? Player::one : Player::two});
        }
        spec.initial = id_string(require(doc, "init", "document"), "init");
        if (doc.contains("ap")) spec.props = string_array(doc.at("ap"), "ap");
        const json &edges = require(doc, "edges", "document");
        if (!edges.is_array()) throw input_error("edges must be an array");
        for (const auto &e : edges) {
            ArenaSpec::Edge edge{id_string(require(e, "from", "edge"), "edge.from"),
                                 id_string(require(e, "to", "edge"), "edge.to"), std::nullopt};
            if (e.contains("action") && !e.at("action").is_null()) edge.action = id_string(e.at("action"), "action");
            spec.edges.push_back(std::move(edge));
        }
        spec.label_true = label_map(doc, "label_true");
        spec.label_perceived = label_map(doc, "label_perceived");

        Arena arena = make_arena(spec);

        const json &obj = require(doc, "objective", "document");
        if (obj.contains("formula") == obj.contains("dfa"))
            throw input_error("objective must contain exactly one of 'formula' or 'dfa'");
        if (obj.contains("formula")) {
            auto text = obj.at("formula").get<std::string>();
            Formula f = parse_formula(text, arena.props());
            return {std::move(arena), FormulaObjective{std::move(text), std::move(f)}};
        }
        Dfa d = parse_dfa(obj.at("dfa"), arena.props());
        return {std::move(arena), std::move(d)};
    } catch (const json::exception &e) {
        throw input_error(std::string("schema violation: ") + e.what());
    }
}

HypergameInput load_arena_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_arena(buf.str());
}

std::string dump_input(const HypergameInput &input)
{
    const ArenaSpec spec = input.arena.to_spec();
    json doc;
    json states = json::array();
    for (const auto &st : spec.states) states.push_back({{"id", st.id}, {"player", st.owner == Player::one ? 1 : 2}});
    doc["states"] = states;
    doc["init"] = spec.initial;
    doc["ap"] = spec.props;
    json edges = json::array();
    for (const auto &e : spec.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"action", *e.action}});
    doc["edges"] = edges;
    auto labels = [](const auto &entries) {
        json m = json::object();
        for (const auto &[id, names] : entries) m[id] = names;
        return m;
    };
    doc["label_true"] = labels(spec.label_true);
    doc["label_perceived"] = labels(spec.label_perceived);
    if (const auto *f = std::get_if<FormulaObjective>(&input.objective)) {
        doc["objective"] = {{"formula", f->text}};
    } else {
        doc["objective"] = {{"dfa", dfa_to_json(std::get<Dfa>(input.objective))}};
    }
    return doc.dump(2) + "\n";
}

Dfa objective_dfa(const HypergameInput &input, std::size_t state_cap)
{
    if (const auto *f = std::get_if<FormulaObjective>(&input.objective))
        return compile_to_dfa(f->formula, input.arena.props(), state_cap);
    return std::get<Dfa>(input.objective);
}

}  // namespace hsyn
