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
#include <stdexcept>
#include <string>

namespace hsyn {

enum class Player : std::uint8_t { one = 1, two = 2 };

constexpr Player opponent(Player p) { return p == Player::one ? Player::two : Player::one; }

/// Index of a state of some game graph (arena, product, HTS, fragment).
using Vertex = std::uint32_t;
/// Global index of an arena edge; doubles as the action identifier in
/// every derived game.
using ActionId = std::uint32_t;
/// Set of atomic propositions encoded as a bitmask over the arena's AP list.
using Symbol = std::uint32_t;

constexpr std::int32_t kNoAction = -1;

/// Selects the serial reference path or the OpenMP path of a kernel.
enum class Exec { serial, parallel };

enum class ErrorKind {
  input,     // malformed document, syntax error, unknown id
  resource,  // a configured size cap was exceeded
  logic      // inconsistent arguments passed between stages
};

class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string &msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

inline Error input_error(const std::string &msg) { return Error(ErrorKind::input, msg); }
inline Error logic_error(const std::string &msg) { return Error(ErrorKind::logic, msg); }

}  // namespace hsyn
