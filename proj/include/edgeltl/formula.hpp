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

// Formula trees for LTL with edge (event) operators.
//
// A Formula is an immutable, reference-counted tree.  Copies are cheap and
// share structure; equality is structural ("same formula" means identical
// tree) and is accelerated by a hash cached in every node.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgeltl {

enum class Op : std::uint8_t {
  Atom,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Next,
  Always,
  Eventually,
  Until,
  Rise,     // up edge:   !A & X A
  Fall,     // down edge: A & X !A
  AnyEdge,  // up or down edge
};

int arity(Op op) noexcept;
bool is_edge(Op op) noexcept;
bool is_binary_boolean(Op op) noexcept;  // And, Or, Implies, Iff

class Formula {
 public:
  // Defaults to `true` so that containers of formulas are default
  // constructible.
  Formula();

  static Formula atom(std::string name);
  static Formula constant(bool value);
  static Formula unary(Op op, Formula operand);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  Op op() const noexcept;
  // Only meaningful for Op::Atom.
  const std::string& name() const noexcept;
  const Formula& child(std::size_t i) const noexcept;
  const Formula& operand() const noexcept { return child(0); }
  const Formula& lhs() const noexcept { return child(0); }
  const Formula& rhs() const noexcept { return child(1); }

  bool is(Op op) const noexcept { return this->op() == op; }
  bool is_atom() const noexcept { return is(Op::Atom); }
  bool is_constant() const noexcept { return is(Op::True) || is(Op::False); }

  std::size_t hash() const noexcept;
  std::size_t size() const noexcept;   // node count
  std::size_t depth() const noexcept;  // atoms and constants have depth 0

  // Stable identity of the shared node; used as a memoization key.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

  // Total order on formulas, used for canonical multiset comparisons.
  friend int compare(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const noexcept {
    return compare(a, b) < 0;
  }
};

// Construction shorthands.
Formula atom(std::string name);
Formula top();
Formula bottom();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula next(Formula f);
Formula always(Formula f);
Formula eventually(Formula f);
Formula until(Formula a, Formula b);
Formula rise(Formula f);
Formula fall(Formula f);
Formula any_edge(Formula f);

// Ordered list of distinct atom identifiers.  The order is canonical for
// state encoding and enumeration.
class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<std::string> names);
  explicit AtomSet(std::vector<std::string> names);

  // Returns false (and does nothing) if the name is already present.
  bool add(std::string name);
  bool contains(std::string_view name) const noexcept;
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  auto begin() const noexcept { return names_.begin(); }
  auto end() const noexcept { return names_.end(); }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

 private:
  std::vector<std::string> names_;
};

// Atom names of f in first-occurrence (pre-order, left to right) order.
AtomSet atoms_of(const Formula& f);

bool contains_op(const Formula& f, Op op);
bool is_next_free(const Formula& f);  // no X
bool is_edge_free(const Formula& f);  // no up/down/edge

// AC view of conjunction / disjunction: nested binary nodes flattened
// left to right.  A non-matching root yields a single element.
std::vector<Formula> flatten(const Formula& f, Op op);

// Right-nested rebuild.  An empty list yields the unit (true for And,
// false for Or).
Formula build(Op op, std::span<const Formula> items);

// Replaces every occurrence of `from` (structurally) by `to`.
Formula replace_all(const Formula& f, const Formula& from, const Formula& to);

// Metavariable substitution: atoms named in `binding` are replaced.
Formula substitute(const Formula& f,
                   const std::vector<std::pair<std::string, Formula>>& binding);

}  // namespace edgeltl

template <>
struct std::hash<edgeltl::Formula> {
  std::size_t operator()(const edgeltl::Formula& f) const noexcept {
    return f.hash();
  }
};
