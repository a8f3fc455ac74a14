/*
 * Copyright 2026 The edgeltl Authors
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

// ASCII surface syntax.
//
//   atom      [a-z][a-z0-9_]*   (except the reserved words below)
//   constant  true | false
//   unary     ! X G F up down edge          (tightest, prefix)
//   binary    U   right-assoc
//             &   left-assoc
//             |   left-assoc
//             ->  right-assoc
//             <-> left-assoc                (loosest)
//
// Parentheses group; whitespace is insignificant.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "edgeltl/formula.hpp"

namespace edgeltl {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Lexical, Syntax, ReservedWord };

  ParseError(Kind kind, SourceSpan span, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  SourceSpan span() const noexcept { return span_; }

 private:
  Kind kind_;
  SourceSpan span_;
};

bool is_reserved_word(std::string_view word) noexcept;
bool is_valid_atom_name(std::string_view name) noexcept;

Formula parse(std::string_view text);

// Output re-parses to a structurally equal formula.  Parentheses are
// minimal except around binary operands of -> and <->, and around edge
// operators under !, which are kept for readability.
std::string render(const Formula& f);

}  // namespace edgeltl
