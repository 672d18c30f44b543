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

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsyn/common.hpp"

namespace hsyn {

/**
 * Co-safe temporal formula in negation normal form. Negation only appears
 * directly on atoms. Atoms are indices into the proposition list the
 * formula was parsed against.
 */
class Formula
{
  public:
    enum class Kind : std::uint8_t { tt, ff, atom, not_atom, conj, disj, next, until, eventually };

    static Formula top();
    static Formula bottom();
    static Formula atom(std::uint32_t prop);
    static Formula not_atom(std::uint32_t prop);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula conj(std::vector<Formula> args);
    static Formula disj(std::vector<Formula> args);
    static Formula next(Formula arg);
    static Formula until(Formula lhs, Formula rhs);
    static Formula eventually(Formula arg);

    Kind kind() const { return node_->kind; }
    std::uint32_t prop() const { return node_->prop; }
    std::span<const Formula> args() const { return node_->args; }
    const Formula &arg(std::size_t i) const { return node_->args.at(i); }

    bool is(Kind k) const { return node_->kind == k; }

    /// Total structural order; equal iff the trees are identical.
    friend int compare(const Formula &a, const Formula &b);
    friend bool operator==(const Formula &a, const Formula &b) { return compare(a, b) == 0; }
    friend bool operator<(const Formula &a, const Formula &b) { return compare(a, b) < 0; }

    /// Renders in the input syntax; `props` supplies atom names.
    std::string to_string(std::span<const std::string> props) const;

    std::size_t depth() const;

  private:
    struct Node
    {
        Kind kind;
        std::uint32_t prop = 0;
        std::vector<Formula> args;
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Kind k, std::uint32_t prop, std::vector<Formula> args);

    std::shared_ptr<const Node> node_;
};

/// Syntax error with the 0-based offset into the input and the tokens
/// that would have been accepted there.
class ParseError : public Error
{
  public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string &msg);
    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string> &expected() const noexcept { return expected_; }

  private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

/**
 * Parses
 *
 *   phi ::= true | false | atom | ! atom | phi & phi | phi | phi
 *         | X phi | phi U phi | F phi | ( phi )
 *
 * with precedence unary > U > & > |, U right-associative and & / | left-
 * associative. `X`, `F`, `U`, `true` and `false` are reserved words.
 */
Formula parse_formula(std::string_view text, std::span<const std::string> props);

/// Flattens and sorts conjunctions/disjunctions, removes duplicates,
/// absorbs true/false and rewrites `F f` as `true U f`. Idempotent.
Formula normalize(const Formula &f);

/// Residual obligation after reading one symbol (result is normalized).
Formula progress(const Formula &f, Symbol sigma);

/// Deterministic automaton over 2^AP with a total transition table.
struct Dfa
{
    std::vector<std::string> props;
    std::vector<std::string> state_names;
    std::vector<std::uint32_t> delta;  // state * alphabet_size() + symbol
    std::uint32_t initial = 0;
    std::vector<bool> accepting;

    std::size_t num_states() const { return state_names.size(); }
    std::size_t alphabet_size() const { return std::size_t{1} << props.size(); }
    std::uint32_t step(std::uint32_t q, Symbol sigma) const { return delta[q * alphabet_size() + sigma]; }
    bool is_accepting(std::uint32_t q) const { return accepting[q]; }
    std::uint32_t run(std::span<const Symbol> word) const;
};

constexpr std::size_t kDefaultDfaStateCap = 10000;
constexpr std::size_t kMaxPropositions = 16;

/// Formula-progression construction. Each state is a normalized residual
/// formula; `true` is the unique accepting state and `false` (if reached)
/// the rejecting sink. States are numbered in breadth-first order.
Dfa compile_to_dfa(const Formula &f, std::span<const std::string> props,
                   std::size_t state_cap = kDefaultDfaStateCap);

/// Checks totality and the absorbing-accepting property; throws on failure.
void validate_dfa(const Dfa &d);

/// True iff some prefix of `word` drives the initial state into F.
bool accepts(const Dfa &d, std::span<const Symbol> word);

/// Encodes a set of proposition names; throws on an undeclared name.
Symbol symbol_of(std::span<const std::string> names, std::span<const std::string> props);
std::vector<std::string> names_of(Symbol sigma, std::span<const std::string> props);

}  // namespace hsyn
