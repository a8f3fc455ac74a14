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

// Equivalence-preserving rewrites on formulas.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edgeltl/formula.hpp"

namespace edgeltl {

// up A   => !A & X A
// down A => A & X !A
// edge A => (!A & X A) | (A & X !A)
Formula desugar_edges(const Formula& f);

// Inverse normalization on the AC view of every conjunction: a pair of
// conjuncts !A, X A becomes up A and a pair A, X !A becomes down A.
// Conjunctions without a match keep their shape.  Idempotent.
Formula resugar_edges(const Formula& f);

// edge A => up A | down A
Formula expand_any_edge(const Formula& f);

// up !A => down A, down !A => up A, edge !A => edge A, everywhere.
Formula normalize_edge_duals(const Formula& f);

// Applies, to a fixpoint, this fixed rule set:
//   G(X & Y)          => G X & G Y
//   F(X | Y)          => F X | F Y
//   G(X -> Y & Z)     => G(X -> Y) & G(X -> Z)
//   G(X -> !Y)        => !F(X & Y)
//   !!X               => X
//   G !(X | Y)        => G(!X & !Y)      (exposes the first rule)
//   F !(X & Y)        => F(!X | !Y)      (exposes the second rule)
//   up !A => down A,  down !A => up A,  edge !A => edge A
//
// Every rule strictly decreases the pair (number of G-over-&, F-over-|
// and implication-split redexes, number of negations above non-atoms)
// lexicographically, so the rewrite terminates.  Idempotent.
Formula rewrite_logic(const Formula& f);

// Clause / term lists over boolean literals.  A literal is any formula
// whose root is not a boolean connective, or the negation of one.  Returns
// nullopt when the expansion would exceed `limit` clauses (terms).
using NormalForm = std::vector<std::vector<Formula>>;
std::optional<NormalForm> to_cnf(const Formula& f, std::size_t limit = 64);
std::optional<NormalForm> to_dnf(const Formula& f, std::size_t limit = 64);

// Strips double negation and pushes nothing else; `!!x` => `x`, otherwise
// wraps in a negation.
Formula negate(const Formula& f);

}  // namespace edgeltl
