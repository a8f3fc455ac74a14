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


// Bounded search for stuttering counterexamples.
//
// Search order (fixed, so results are reproducible):
//   states   all assignments over the search atoms, ordered by binary
//            encoding with the first atom most significant, all-true first;
//   stems    by length 0..max_stem, then lexicographically;
//   loops    by length 1..max_loop, then lexicographically;
//   unroll   k = 0..max_unroll, giving t' = unroll(t, k);
//   stutter  positions i = 0 ..< |stem of t'| ascending.
// The first (t', i) with eval(f, t') != eval(f, stutter_at(t', i)) wins.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "edgeltl/formula.hpp"
#include "edgeltl/semantics.hpp"

namespace edgeltl {

struct SearchBounds {
  std::size_t max_stem = 4;
  std::size_t max_loop = 3;
  std::size_t max_unroll = 2;
  std::size_t atom_cap = 3;
};

class AtomCapError : public std::invalid_argument {
 public:
  AtomCapError(std::size_t atoms, std::size_t cap)
      : std::invalid_argument("formula has " + std::to_string(atoms) +
                              " atoms, more than the search cap of " + std::to_string(cap)) {}
};

struct Counterexample {
  LassoTrace trace;  // already unrolled; stutter_index < trace.stem_length()
  std::size_t stutter_index;
  bool value_before;  // eval(f, trace)
  bool value_after;   // eval(f, stutter_at(trace, stutter_index))

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// Atoms the search ranges over: atoms_of(f), or one synthetic atom when f
// has none.
AtomSet search_atoms(const Formula& f);

// Throws AtomCapError when f has more atoms than b.atom_cap and
// std::invalid_argument when b.max_loop is 0.  With jobs > 1 the lasso
// space is split across threads; the result is the same as with jobs = 1.
std::optional<Counterexample> falsify(const Formula& f, const SearchBounds& b = {},
                                      unsigned jobs = 1);

// Smallest counterexample by (stem length, loop length, stutter index) over
// lassos stuttered directly in their stem, found in search order.  c must
// be a valid counterexample for f.
Counterexample minimize(const Counterexample& c, const Formula& f);

// Re-checks c against f with eval.
bool is_valid_counterexample(const Counterexample& c, const Formula& f);

}  // namespace edgeltl
