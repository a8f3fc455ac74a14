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

// Lasso traces and the interpretation of formulas over them.
//
// A LassoTrace denotes the infinite word  stem . loop . loop . ...
// Every suffix starting at or after the stem is periodic with period
// |loop|, so the suffixes from positions p, p+|loop|, p+2|loop|, ... are
// identical once p >= |stem|.  Evaluation therefore folds any position
// into [0, |stem| + |loop|).
//
// Witness bound for the temporal operators: from a folded position p, the
// positions p ..< |stem| + 2|loop| visit every distinct suffix reachable
// from p at least once.  For strong until, if any witness exists then the
// smallest position holding the right operand is also a witness (the left
// operand must hold on a prefix of the interval a larger witness needs),
// and that smallest position lies inside the bound.  So searching the
// bound for the first right-operand position and checking the left operand
// before it is exact.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgeltl/formula.hpp"

namespace edgeltl {

// Assignment of a boolean to every atom of an AtomSet, in atom order.
class State {
 public:
  State() = default;
  explicit State(std::vector<bool> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool operator[](std::size_t i) const { return values_[i]; }
  const std::vector<bool>& values() const noexcept { return values_; }

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<bool> values_;
};

class UnknownAtomError : public std::invalid_argument {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : std::invalid_argument("formula mentions atom '" + atom +
                              "' which is not part of the trace"),
        atom_(atom) {}
  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

class LassoTrace {
 public:
  // Throws std::invalid_argument when the loop is empty or a state does not
  // cover exactly the atoms.
  LassoTrace(AtomSet atoms, std::vector<State> stem, std::vector<State> loop);

  const AtomSet& atoms() const noexcept { return atoms_; }
  const std::vector<State>& stem() const noexcept { return stem_; }
  const std::vector<State>& loop() const noexcept { return loop_; }
  std::size_t stem_length() const noexcept { return stem_.size(); }
  std::size_t loop_length() const noexcept { return loop_.size(); }
  // Number of distinct positions: |stem| + |loop|.
  std::size_t period_end() const noexcept { return stem_.size() + loop_.size(); }

  // Folds an arbitrary position into [0, period_end()).
  std::size_t fold(std::size_t position) const noexcept;
  const State& state_at(std::size_t position) const noexcept;

  friend bool operator==(const LassoTrace&, const LassoTrace&) = default;

 private:
  AtomSet atoms_;
  std::vector<State> stem_;
  std::vector<State> loop_;
};

// Truth of f on the word denoted by t, at position p.
// Throws UnknownAtomError if f mentions an atom outside t.atoms().
bool eval(const Formula& f, const LassoTrace& t, std::size_t position = 0);

// Same contract as eval at position 0, computed independently: every
// subformula is labelled at every position bottom-up, with the temporal
// operators resolved on the loop by fixpoint iteration.
bool eval_oracle(const Formula& f, const LassoTrace& t);

// Repeats the stem state at index i:
//   s_0 .. s_i, s_i, s_{i+1} ..
// Throws std::out_of_range unless i < |stem|.  Loop states are reached by
// unrolling first.
LassoTrace stutter_at(const LassoTrace& t, std::size_t i);

// Moves k copies of the loop into the stem; the denoted word is unchanged.
LassoTrace unroll(const LassoTrace& t, std::size_t k);

}  // namespace edgeltl
