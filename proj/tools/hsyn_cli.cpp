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

#include <iostream>

#include <CLI11.hpp>

#include "hsyn/cli.hpp"

int main(int argc, char **argv)
{
    CLI::App app{"Stealthy deceptive strategy synthesis for games with labeling misperception"};
    hsyn::RunConfig cfg;
    std::string mode = "sure";
    std::string target = "product";
    std::string sampling = "uniform";
    std::size_t cap = 0;

    app.add_option("input", cfg.input, "Input arena document (JSON)")->required();
    app.add_option("--mode", mode, "perceptual | sure | asw | simulate | verify")
        ->check(CLI::IsMember({"perceptual", "sure", "asw", "simulate", "verify"}));
    app.add_option("--out", cfg.report_path, "Write the JSON report here");
    app.add_option("--dot", cfg.dot_path, "Write a GraphViz rendering here");
    app.add_option("--trials", cfg.trials, "Simulation trials")->check(CLI::NonNegativeNumber);
    app.add_option("--cap", cap, "Simulation step cap / verification bound (0 = default)");
    app.add_option("--seed", cfg.seed, "Simulation seed");
    app.add_flag("--full-space", cfg.full_space, "Solve over all of S x Q x Q instead of the reachable fragment");
    app.add_option("--dfa-cap", cfg.dfa_cap, "Maximum number of DFA states")->check(CLI::PositiveNumber);
    app.add_option("--target", target, "product | arena")->check(CLI::IsMember({"product", "arena"}));
    app.add_option("--start", cfg.start, "Start state as s,q,p (default: initial state)");
    app.add_option("--sampling", sampling, "P2 support sampling: uniform | skewed")
        ->check(CLI::IsMember({"uniform", "skewed"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : hsyn::exit_code::input_error;
    }

    cfg.mode = *hsyn::parse_mode(mode);
    cfg.target = target == "arena" ? hsyn::TargetMode::arena_marking : hsyn::TargetMode::true_region;
    if (cap > 0) cfg.cap = cap;
    if (sampling == "skewed") cfg.sampling.kind = hsyn::SupportSampling::Kind::skewed;
    return hsyn::run(cfg, std::cout, std::cerr);
}
