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

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hsyn/almostsure.hpp"
#include "hsyn/arena.hpp"
#include "hsyn/pipeline.hpp"
#include "hsyn/speclang.hpp"

#ifndef HSYN_DATA_DIR
#define HSYN_DATA_DIR "data"
#endif

namespace hsyn::testing {

inline std::string data_path(const std::string &name) { return std::string(HSYN_DATA_DIR) + "/" + name; }

inline const HypergameInput &running_example()
{
    static const HypergameInput in = load_arena_file(data_path("running_example.json"));
    return in;
}

inline Synthesis running_synthesis(TargetMode mode = TargetMode::arena_marking, Exec exec = Exec::parallel)
{
    SynthesisOptions opts;
    opts.target = mode;
    opts.exec = exec;
    return synthesize(running_example(), opts);
}

using Triple = std::tuple<std::string, std::uint32_t, std::uint32_t>;
using TripleSet = std::set<Triple>;

inline Triple triple_of(const Arena &a, const Hts &h, Vertex v)
{
    return {a.id(h.arena_state(v)), h.q_of(v), h.p_of(v)};
}

template <class Mask>
TripleSet triples_of(const Arena &a, const Hts &h, const Mask &mask)
{
    TripleSet out;
    for (Vertex v = 0; v < mask.size(); ++v)
        if (mask[v]) out.insert(triple_of(a, h, v));
    return out;
}

inline TripleSet local_triples(const Arena &a, const Hts &h, const StochasticGame &g,
                               const std::vector<std::uint8_t> &local)
{
    TripleSet out;
    for (Vertex i = 0; i < local.size(); ++i)
        if (local[i]) out.insert(triple_of(a, h, g.to_hts[i]));
    return out;
}

inline Vertex hts_vertex(const Arena &a, const Hts &h, const std::string &s, std::uint32_t q, std::uint32_t p)
{
    return h.vertex(a.index_of(s), q, p);
}

// ---------------------------------------------------------------------------
// Random instances

inline std::vector<std::string> prop_names(std::size_t k)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

struct ArenaShape
{
    std::size_t states = 10;
    std::size_t max_branch = 3;
    std::size_t props = 1;
    double label_density = 0.2;
    double trap = 0.0;  // chance that a state only loops on itself
};

inline ArenaSpec random_arena_spec(std::mt19937_64 &rng, const ArenaShape &shape)
{
    ArenaSpec spec;
    const std::size_t n = shape.states;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<std::size_t> branch(1, std::min(shape.max_branch, n));
    std::bernoulli_distribution coin(0.5), label(shape.label_density), trap(shape.trap);
    spec.props = prop_names(shape.props);
    for (std::size_t s = 0; s < n; ++s)
        spec.states.push_back({std::to_string(s), coin(rng) ? Player::one : Player::two});
    spec.initial = "0";
    for (std::size_t s = 0; s < n; ++s) {
        std::set<std::size_t> targets;
        if (s > 0 && trap(rng)) {
            spec.edges.push_back({std::to_string(s), std::to_string(s), std::nullopt});
            continue;
        }
        const std::size_t k = branch(rng);
        while (targets.size() < k) targets.insert(pick(rng));
        for (auto t : targets) spec.edges.push_back({std::to_string(s), std::to_string(t), std::nullopt});
    }
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::string> lt, lp;
        for (const auto &p : spec.props) {
            if (label(rng)) lt.push_back(p);
            if (label(rng)) lp.push_back(p);
        }
        if (!lt.empty()) spec.label_true.push_back({std::to_string(s), lt});
        if (!lp.empty()) spec.label_perceived.push_back({std::to_string(s), lp});
    }
    return spec;
}

inline Arena random_arena(std::mt19937_64 &rng, const ArenaShape &shape)
{
    return make_arena(random_arena_spec(rng, shape));
}

/// Random DFA with absorbing accepting states; at least one accepting state
/// when `nq` > 1.
inline Dfa random_dfa(std::mt19937_64 &rng, std::size_t nq, const std::vector<std::string> &props)
{
    Dfa d;
    d.props = props;
    for (std::size_t q = 0; q < nq; ++q) d.state_names.push_back("q" + std::to_string(q));
    d.accepting.assign(nq, false);
    std::bernoulli_distribution acc(0.3);
    for (std::size_t q = 1; q < nq; ++q) d.accepting[q] = acc(rng);
    if (nq > 1) d.accepting[nq - 1] = true;
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(nq - 1));
    d.delta.resize(nq * d.alphabet_size());
    for (std::uint32_t q = 0; q < nq; ++q)
        for (Symbol s = 0; s < d.alphabet_size(); ++s)
            d.delta[q * d.alphabet_size() + s] = d.accepting[q] ? q : pick(rng);
    d.initial = 0;
    validate_dfa(d);
    return d;
}

inline Formula random_formula(std::mt19937_64 &rng, std::size_t depth, std::uint32_t atoms)
{
    std::uniform_int_distribution<std::uint32_t> atom(0, atoms - 1);
    if (depth == 0) {
        switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
        case 0: return Formula::top();
        case 1: return Formula::bottom();
        case 2:
        case 3:
        case 4: return Formula::not_atom(atom(rng));
        default: return Formula::atom(atom(rng));
        }
    }
    auto sub = [&] { return random_formula(rng, std::uniform_int_distribution<std::size_t>(0, depth - 1)(rng), atoms); };
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return Formula::conj(sub(), sub());
    case 1: return Formula::disj(sub(), sub());
    case 2: return Formula::next(sub());
    case 3: return Formula::until(sub(), sub());
    case 4: return Formula::eventually(sub());
    default: return random_formula(rng, 0, atoms);
    }
}

inline std::vector<std::vector<Symbol>> all_words(std::size_t num_props, std::size_t max_len)
{
    const Symbol alpha = Symbol{1} << num_props;
    std::vector<std::vector<Symbol>> out{{}};
    std::vector<std::vector<Symbol>> frontier{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Symbol>> next;
        for (const auto &w : frontier)
            for (Symbol s = 0; s < alpha; ++s) {
                auto x = w;
                x.push_back(s);
                next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace hsyn::testing
