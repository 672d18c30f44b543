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

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "hsyn/pipeline.hpp"
#include "hsyn/simulate.hpp"
#include "support/fixtures.hpp"

using namespace hsyn;
using namespace hsyn::testing;

namespace {

Exec exec_of(const benchmark::State &state) { return state.range(1) ? Exec::parallel : Exec::serial; }

HypergameInput instance(std::size_t states)
{
    std::mt19937_64 rng(states);
    return {random_arena(rng, {states, 4, 2, 0.05}), random_dfa(rng, 4, prop_names(2))};
}

void BM_Product(benchmark::State &state)
{
    const auto in = instance(static_cast<std::size_t>(state.range(0)));
    const Dfa &d = std::get<Dfa>(in.objective);
    for (auto _ : state) benchmark::DoNotOptimize(build_product(in.arena, Labeling::truth, d, exec_of(state)));
}

void BM_Hts(benchmark::State &state)
{
    const auto in = instance(static_cast<std::size_t>(state.range(0)));
    const Dfa &d = std::get<Dfa>(in.objective);
    const ProductGame g = build_product(in.arena, Labeling::truth, d);
    const Regions r = solve_reachability(g.graph, g.target).regions;
    for (auto _ : state) benchmark::DoNotOptimize(build_hts(in.arena, d, r, exec_of(state)));
}

void BM_Restrict(benchmark::State &state)
{
    const auto in = instance(static_cast<std::size_t>(state.range(0)));
    const Synthesis s = synthesize(in);
    for (auto _ : state) benchmark::DoNotOptimize(build_restricted_game(s.hts, s.sr, exec_of(state)));
}

void BM_PreStep(benchmark::State &state)
{
    const auto in = instance(static_cast<std::size_t>(state.range(0)));
    const Synthesis s = synthesize(in);
    const StochasticGame g = build_stochastic_game(s.rg, true);
    const std::vector<std::uint8_t> x(g.size(), 1);
    std::vector<std::uint8_t> y(g.size());
    for (Vertex v = 0; v < g.size(); ++v) y[v] = g.sink[v];
    for (auto _ : state) benchmark::DoNotOptimize(pre_step(y, x, g, exec_of(state)));
}

void BM_Simulate(benchmark::State &state)
{
    const Synthesis s = running_synthesis();
    const StochasticGame g = build_stochastic_game(s.rg);
    const AswResult r = solve_asw(g);
    SimulationOptions opts;
    opts.trials = static_cast<std::size_t>(state.range(0));
    opts.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_asw(g, s.hts, s.sr, r, s.hts.initial, opts));
}

}  // namespace

BENCHMARK(BM_Product)->ArgsProduct({{1000, 20000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hts)->ArgsProduct({{1000, 20000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Restrict)->ArgsProduct({{1000, 20000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PreStep)->ArgsProduct({{1000, 20000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Simulate)->ArgsProduct({{10000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
