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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsyn/almostsure.hpp"
#include "hsyn/arena.hpp"
#include "hsyn/hypergame.hpp"
#include "hsyn/product.hpp"

namespace hsyn {

/// Optional node fills, indexed by the exported graph's vertex ids. An empty
/// vector means "no fill of that kind".
struct DotRegions
{
    std::vector<std::uint8_t> true_win;       // drawn light blue
    std::vector<std::uint8_t> perceived_win;  // drawn pink
};

// P1 states are ellipses and P2 states boxes throughout.
std::string arena_to_dot(const Arena &arena, const DotRegions &regions = {});
std::string product_to_dot(const Arena &arena, const ProductGame &game, const DotRegions &regions = {});

/// HTS states reachable from the initial state. With `rg`, moves pruned by
/// the restriction are dashed red and states outside its fragment dashed.
std::string hts_to_dot(const Arena &arena, const Hts &hts, const DotRegions &regions = {},
                       const RestrictedGame *rg = nullptr);

/// Stochastic game; moves out of probabilistic states are dotted.
std::string stochastic_to_dot(const Arena &arena, const Hts &hts, const StochasticGame &g,
                              const DotRegions &regions = {});

void write_text_file(const std::string &path, std::string_view text);

}  // namespace hsyn
