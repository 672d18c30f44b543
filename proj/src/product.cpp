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

#include "hsyn/product.hpp"

namespace hsyn {

ProductGame build_product(const Arena &arena, Labeling which, const Dfa &dfa, Exec exec)
{
    if (dfa.props != arena.props()) throw logic_error("DFA alphabet does not match the arena's propositions");

    ProductGame pg;
    pg.labeling = which;
    const std::size_t nq = dfa.num_states();
    const std::size_t ns = arena.num_states();
    const std::size_t n = ns * nq;
    pg.num_dfa_states = nq;

    std::vector<Player> owner(n);
    std::vector<std::size_t> offsets(n + 1, 0);
    for (Vertex s = 0; s < ns; ++s) {
        const std::size_t deg = arena.out_edges(s).size();
        for (std::uint32_t q = 0; q < nq; ++q) offsets[s * nq + q + 1] = offsets[s * nq + q] + deg;
    }
    std::vector<Move> moves(offsets.back());
    pg.target.assign(n, 0);

    auto fill = [&](std::int64_t v) {
        const Vertex s = static_cast<Vertex>(v / nq);
        const auto q = static_cast<std::uint32_t>(v % nq);
        owner[v] = arena.owner(s);
        pg.target[v] = dfa.is_accepting(q);
        std::size_t k = offsets[v];
        ActionId a = arena.first_edge(s);
        for (const auto &e : arena.out_edges(s)) {
            const auto q2 = dfa.step(q, arena.label(which, e.to));
            moves[k++] = {static_cast<Vertex>(e.to * nq + q2), a++};
        }
    };
    const auto count = static_cast<std::int64_t>(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t v = 0; v < count; ++v) fill(v);
    } else {
        for (std::int64_t v = 0; v < count; ++v) fill(v);
    }

    pg.graph = GameGraph(std::move(owner), std::move(offsets), std::move(moves));
    pg.initial = pg.vertex(arena.initial(), dfa.step(dfa.initial, arena.label(which, arena.initial())));
    return pg;
}

}  // namespace hsyn
