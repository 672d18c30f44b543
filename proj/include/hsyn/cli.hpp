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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "hsyn/pipeline.hpp"
#include "hsyn/simulate.hpp"

namespace hsyn {

enum class Mode { perceptual, sure, asw, simulate, verify };

struct RunConfig
{
    std::string input;
    Mode mode = Mode::sure;
    std::optional<std::string> report_path;
    std::optional<std::string> dot_path;
    std::size_t trials = 10000;
    std::optional<std::size_t> cap;
    std::uint64_t seed = 0;
    bool full_space = false;
    std::size_t dfa_cap = kDefaultDfaStateCap;
    TargetMode target = TargetMode::true_region;
    std::optional<std::string> start;  // "s,q,p"; default is the initial state
    SupportSampling sampling;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int input_error = 1;
constexpr int verification_failed = 2;
constexpr int resource_exceeded = 3;
}  // namespace exit_code

std::optional<Mode> parse_mode(std::string_view s);
std::string_view mode_name(Mode m);

/// Runs one command; writes a human-readable summary to `out`, diagnostics
/// to `err`, and the JSON report / DOT file when paths are configured.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace hsyn
