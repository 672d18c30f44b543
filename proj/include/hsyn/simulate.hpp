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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsyn/almostsure.hpp"
#include "hsyn/hypergame.hpp"

namespace hsyn {

/// A play over HTS states; actions[i] leads from states[i] to states[i+1].
struct Trace
{
    std::vector<Vertex> states;
    std::vector<ActionId> actions;
    bool reached_target = false;
};

struct VerificationReport
{
    bool verified = false;
    std::size_t bound = 0;
    std::size_t worst_case_steps = 0;  // meaningful when verified
    Trace counterexample;              // when not verified
    std::optional<std::size_t> cycle_start;  // index into counterexample.states for a lasso
};

/**
 * Explores every P2 reply in the restricted game while P1 follows `strat`
 * (indexed by HTS vertex). Verified iff every play reaches the target within
 * `bound` steps (default: number of states in the restricted fragment).
 * Throws Error(logic) if the strategy is undefined at a reached P1 state.
 */
VerificationReport verify_sure(const RestrictedGame &rg, const Strategy &strat, Vertex start,
                               std::optional<std::size_t> bound = std::nullopt);

/// How P2 picks among the support at a probabilistic state.
struct SupportSampling
{
    enum class Kind { uniform, skewed } kind = Kind::uniform;
    double first_weight = 0.9;  // skewed: mass on the first move, rest shared evenly
};

struct SimulationOptions
{
    std::size_t trials = 10000;
    std::optional<std::size_t> cap;  // default 100 * |game|
    std::uint64_t seed = 0;
    SupportSampling sampling;
    Exec exec = Exec::parallel;
};

struct SimulationStats
{
    std::size_t trials = 0;
    std::size_t wins = 0;
    std::size_t losses_by_cap = 0;
    std::size_t stealth_violations = 0;
    std::uint64_t seed = 0;
    std::size_t cap = 0;
    std::uint64_t total_steps = 0;
    bool start_in_region = true;

    std::optional<double> win_rate() const
    {
        if (trials == 0) return std::nullopt;
        return static_cast<double>(wins) / static_cast<double>(trials);
    }
    friend bool operator==(const SimulationStats &, const SimulationStats &) = default;
};

/**
 * Monte-Carlo plays of the stochastic game from HTS state `start`. P1
 * follows `asw.strategy` (first enabled move where it is undefined); a play
 * stops with a win on entering a sink. Each trial's random stream depends
 * only on (seed, trial index), so serial and parallel runs agree.
 */
SimulationStats simulate_asw(const StochasticGame &g, const Hts &hts, const SrActionMap &sr, const AswResult &asw,
                             Vertex start, const SimulationOptions &opts);

/// Runs a single trial and returns its trace (HTS vertex ids).
Trace simulate_trial(const StochasticGame &g, const AswResult &asw, Vertex start, std::size_t cap,
                     std::uint64_t seed, std::uint64_t trial, const SupportSampling &sampling = {});

/**
 * True iff every P1 action taken before the trace first enters `target`
 * is rationalizable for P1 at the corresponding perceived state. Throws if
 * the trace does not follow the HTS.
 */
bool audit_stealth(const Trace &trace, const Hts &hts, const SrActionMap &sr, std::span<const std::uint8_t> target);

}  // namespace hsyn
