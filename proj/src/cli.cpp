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

#include "hsyn/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hsyn/dot.hpp"

namespace hsyn {

using json = nlohmann::json;

std::optional<Mode> parse_mode(std::string_view s)
{
    if (s == "perceptual") return Mode::perceptual;
    if (s == "sure") return Mode::sure;
    if (s == "asw") return Mode::asw;
    if (s == "simulate") return Mode::simulate;
    if (s == "verify") return Mode::verify;
    return std::nullopt;
}

std::string_view mode_name(Mode m)
{
    switch (m) {
    case Mode::perceptual: return "perceptual";
    case Mode::sure: return "sure";
    case Mode::asw: return "asw";
    case Mode::simulate: return "simulate";
    case Mode::verify: return "verify";
    }
    return "?";
}

namespace {

struct Outcome
{
    json report;
    std::ostringstream summary;
    std::string dot;
    int status = exit_code::ok;
};

json triple(const Arena &arena, const Hts &hts, Vertex v)
{
    return json::array({arena.id(hts.arena_state(v)), hts.q_of(v), hts.p_of(v)});
}

std::string triple_text(const Arena &arena, const Hts &hts, Vertex v)
{
    return "(" + arena.id(hts.arena_state(v)) + "," + std::to_string(hts.q_of(v)) + ","
           + std::to_string(hts.p_of(v)) + ")";
}

template <class Pred>
json triples(const Arena &arena, const Hts &hts, Pred pred)
{
    json out = json::array();
    for (Vertex v = 0; v < hts.graph.num_vertices(); ++v)
        if (pred(v)) out.push_back(triple(arena, hts, v));
    return out;
}

template <class Pred>
std::string triples_text(const Arena &arena, const Hts &hts, Pred pred)
{
    std::string s = "{";
    bool first = true;
    for (Vertex v = 0; v < hts.graph.num_vertices(); ++v) {
        if (!pred(v)) continue;
        s += (first ? "" : ", ") + triple_text(arena, hts, v);
        first = false;
    }
    return s + "}";
}

json strategy_table(const Arena &arena, const Hts &hts, const Strategy &strat, std::span<const Vertex> order)
{
    json out = json::array();
    for (Vertex v : order)
        if (auto a = strat(v)) out.push_back({{"state", triple(arena, hts, v)}, {"action", arena.action_name(*a)}});
    return out;
}

json pair_region(const Arena &arena, const ProductGame &g, const Regions &r, bool win1)
{
    json out = json::array();
    for (Vertex v = 0; v < g.graph.num_vertices(); ++v)
        if (r.in_win1(v) == win1) out.push_back(json::array({arena.id(g.arena_state(v)), g.dfa_state(v)}));
    return out;
}

json arena_region(const Arena &arena, const Regions &r, bool win1)
{
    json out = json::array();
    for (Vertex s = 0; s < arena.num_states(); ++s)
        if (r.in_win1(s) == win1) out.push_back(arena.id(s));
    return out;
}

std::string ids_text(const json &ids)
{
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + ids[i].get<std::string>();
    return s + "}";
}

Vertex parse_start(const std::string &text, const Arena &arena, const Hts &hts)
{
    const auto c1 = text.rfind(',');
    const auto c0 = c1 == std::string::npos ? std::string::npos : text.rfind(',', c1 - 1);
    if (c0 == std::string::npos) throw input_error("--start expects 's,q,p', got '" + text + "'");
    const Vertex s = arena.index_of(text.substr(0, c0));
    std::uint32_t q = 0, p = 0;
    try {
        q = static_cast<std::uint32_t>(std::stoul(text.substr(c0 + 1, c1 - c0 - 1)));
        p = static_cast<std::uint32_t>(std::stoul(text.substr(c1 + 1)));
    } catch (const std::exception &) {
        throw input_error("--start expects 's,q,p', got '" + text + "'");
    }
    if (q >= hts.nq() || p >= hts.nq()) throw input_error("--start automaton state out of range");
    return hts.vertex(s, q, p);
}

std::vector<Vertex> domain_order(const std::vector<std::uint8_t> &mask)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < mask.size(); ++v)
        if (mask[v]) out.push_back(v);
    return out;
}

void do_perceptual(const HypergameInput &in, const Synthesis &syn, Outcome &o)
{
    const Arena &a = in.arena;
    o.report["true_game"] = {{"win1", pair_region(a, syn.true_game, syn.true_solution.regions, true)},
                             {"win2", pair_region(a, syn.true_game, syn.true_solution.regions, false)}};
    o.report["perceived_game"] = {{"win1", pair_region(a, syn.perceived_game, syn.perceived_solution.regions, true)},
                                  {"win2",
                                   pair_region(a, syn.perceived_game, syn.perceived_solution.regions, false)}};
    if (syn.true_marking && syn.perceived_marking) {
        const auto &t = syn.true_marking->solution.regions;
        const auto &p = syn.perceived_marking->solution.regions;
        o.report["arena_level"] = {
            {"true", {{"win1", arena_region(a, t, true)}, {"win2", arena_region(a, t, false)}}},
            {"perceived", {{"win1", arena_region(a, p, true)}, {"win2", arena_region(a, p, false)}}}};
        o.summary << "arena-level true game:      P1 wins " << ids_text(o.report["arena_level"]["true"]["win1"])
                  << ", P2 wins " << ids_text(o.report["arena_level"]["true"]["win2"]) << "\n";
        o.summary << "arena-level perceived game: P1 wins " << ids_text(o.report["arena_level"]["perceived"]["win1"])
                  << ", P2 wins " << ids_text(o.report["arena_level"]["perceived"]["win2"]) << "\n";
        o.dot = arena_to_dot(a, {t.win1, p.win1});
    } else {
        o.dot = product_to_dot(a, syn.true_game, {syn.true_solution.regions.win1, {}});
    }
    o.summary << "true product: " << o.report["true_game"]["win1"].size() << " P1-winning of "
              << syn.true_game.graph.num_vertices() << " states\n";
    o.summary << "perceived product: " << o.report["perceived_game"]["win1"].size() << " P1-winning of "
              << syn.perceived_game.graph.num_vertices() << " states\n";
}

void do_sure(const HypergameInput &in, const Synthesis &syn, const DeceptiveSure &ds, Outcome &o)
{
    const Arena &a = in.arena;
    const Hts &h = syn.hts;
    const auto order = domain_order(ds.domain);
    o.report["domain"] = triples(a, h, [&](Vertex v) { return ds.domain[v] != 0; });
    o.report["target"] = triples(a, h, [&](Vertex v) { return ds.domain[v] && h.target[v]; });
    o.report["region"] = triples(a, h, [&](Vertex v) { return ds.win[v] != 0; });
    o.report["strategy"] = strategy_table(a, h, ds.strategy, order);
    o.report["initial_winning"] = ds.win[h.initial] != 0;
    o.summary << "solved states: " << order.size() << "\n";
    o.summary << "deceptive sure region: " << triples_text(a, h, [&](Vertex v) { return ds.win[v] != 0; }) << "\n";
    o.summary << "strategy (" << o.report["strategy"].size() << " entries):\n";
    for (const auto &row : o.report["strategy"])
        o.summary << "  " << row["state"].dump() << " -> " << row["action"].get<std::string>() << "\n";
    o.dot = hts_to_dot(a, h, {h.target, {}}, &syn.rg);
}

void do_asw(const HypergameInput &in, const Synthesis &syn, const StochasticGame &g, const AswResult &r, Outcome &o)
{
    const Arena &a = in.arena;
    const Hts &h = syn.hts;
    auto to_mask = [&](const std::vector<std::uint8_t> &local) {
        std::vector<std::uint8_t> m(h.graph.num_vertices(), 0);
        for (Vertex i = 0; i < local.size(); ++i) m[g.to_hts[i]] = local[i];
        return m;
    };
    const auto region = to_mask(r.region);
    o.report["region"] = triples(a, h, [&](Vertex v) { return region[v] != 0; });
    json levels = json::array();
    o.summary << "almost-sure region: " << triples_text(a, h, [&](Vertex v) { return region[v] != 0; }) << "\n";
    for (std::size_t i = 0; i < r.y.size(); ++i) {
        const auto m = to_mask(r.y[i]);
        levels.push_back(triples(a, h, [&](Vertex v) { return m[v] != 0; }));
        o.summary << "Y" << i << " = " << triples_text(a, h, [&](Vertex v) { return m[v] != 0; }) << "\n";
    }
    o.report["levels"] = levels;
    json strat = json::array();
    for (Vertex i = 0; i < g.size(); ++i)
        if (auto act = r.strategy(i))
            strat.push_back({{"state", triple(a, h, g.to_hts[i])}, {"action", a.action_name(*act)}});
    o.report["strategy"] = strat;
    o.summary << "strategy (" << strat.size() << " entries):\n";
    for (const auto &row : strat)
        o.summary << "  " << row["state"].dump() << " -> " << row["action"].get<std::string>() << "\n";
    o.report["outer_iterations"] = r.outer_sizes.size();
    o.report["initial_winning"] = r.region[g.initial] != 0;
    o.dot = stochastic_to_dot(a, h, g, {to_mask(g.sink), {}});
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    Outcome o;
    try {
        const HypergameInput in = load_arena_file(config.input);
        SynthesisOptions opts;
        opts.target = config.target;
        opts.full_space = config.full_space;
        opts.dfa_cap = config.dfa_cap;
        const Synthesis syn = synthesize(in, opts);
        const Arena &a = in.arena;
        const Hts &h = syn.hts;

        o.report["mode"] = std::string(mode_name(config.mode));
        o.report["target_mode"] = config.target == TargetMode::arena_marking ? "arena" : "product";
        o.report["dfa_states"] = syn.dfa.num_states();
        o.report["initial"] = triple(a, h, h.initial);
        const Vertex start = config.start ? parse_start(*config.start, a, h) : h.initial;

        switch (config.mode) {
        case Mode::perceptual: do_perceptual(in, syn, o); break;
        case Mode::sure: do_sure(in, syn, solve_deceptive_sure(syn.rg, config.full_space), o); break;
        case Mode::asw: {
            const StochasticGame g = build_stochastic_game(syn.rg, config.full_space);
            do_asw(in, syn, g, solve_asw(g), o);
            break;
        }
        case Mode::simulate: {
            const StochasticGame g = build_stochastic_game(syn.rg, config.full_space);
            const AswResult r = solve_asw(g);
            SimulationOptions so;
            so.trials = config.trials;
            so.cap = config.cap;
            so.seed = config.seed;
            so.sampling = config.sampling;
            const SimulationStats st = simulate_asw(g, h, syn.sr, r, start, so);
            o.report["start"] = triple(a, h, start);
            o.report["stats"] = {{"trials", st.trials},
                                 {"wins", st.wins},
                                 {"losses_by_cap", st.losses_by_cap},
                                 {"stealth_violations", st.stealth_violations},
                                 {"seed", st.seed},
                                 {"cap", st.cap},
                                 {"total_steps", st.total_steps},
                                 {"win_rate", st.win_rate() ? json(*st.win_rate()) : json(nullptr)}};
            if (!st.start_in_region)
                err << "warning: start state is outside the almost-sure region; a win rate below 1 is expected\n";
            o.summary << "trials " << st.trials << ", wins " << st.wins << ", losses by cap " << st.losses_by_cap
                      << ", stealth violations " << st.stealth_violations << ", win rate "
                      << (st.win_rate() ? std::to_string(*st.win_rate()) : std::string("n/a")) << "\n";
            o.dot = stochastic_to_dot(a, h, g);
            break;
        }
        case Mode::verify: {
            const DeceptiveSure ds = solve_deceptive_sure(syn.rg, config.full_space);
            const Strategy strat = complete_strategy(syn.rg.graph, ds.strategy);
            const VerificationReport rep = verify_sure(syn.rg, strat, start, config.cap);
            o.report["start"] = triple(a, h, start);
            o.report["verified"] = rep.verified;
            o.report["bound"] = rep.bound;
            if (rep.verified) {
                o.report["worst_case_steps"] = rep.worst_case_steps;
                o.summary << "verified: every play from " << triple_text(a, h, start) << " reaches the target within "
                          << rep.worst_case_steps << " steps (bound " << rep.bound << ")\n";
            } else {
                json play = json::array();
                for (Vertex v : rep.counterexample.states) play.push_back(triple(a, h, v));
                o.report["counterexample"] = play;
                if (rep.cycle_start) o.report["cycle_start"] = *rep.cycle_start;
                o.summary << "NOT verified from " << triple_text(a, h, start) << "; counterexample:";
                for (Vertex v : rep.counterexample.states) o.summary << " " << triple_text(a, h, v);
                o.summary << "\n";
                o.status = exit_code::verification_failed;
            }
            o.dot = hts_to_dot(a, h, {h.target, {}}, &syn.rg);
            break;
        }
        }

        if (config.report_path) write_text_file(*config.report_path, o.report.dump(2) + "\n");
        if (config.dot_path) write_text_file(*config.dot_path, o.dot);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::resource ? exit_code::resource_exceeded : exit_code::input_error;
    }
    out << o.summary.str();
    return o.status;
}

}  // namespace hsyn
