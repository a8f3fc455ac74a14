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

#include "edgeltl/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "edgeltl/syntax.hpp"

namespace edgeltl {

int arity(Op op) noexcept {
  switch (op) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return 0;
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
    case Op::Until:
      return 2;
    default:
      return 1;
  }
}

bool is_edge(Op op) noexcept {
  return op == Op::Rise || op == Op::Fall || op == Op::AnyEdge;
}

bool is_binary_boolean(Op op) noexcept {
  return op == Op::And || op == Op::Or || op == Op::Implies || op == Op::Iff;
}

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> kids;
  std::size_t hash;
  std::size_t size;
  std::size_t depth;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::Formula() : Formula(constant(true)) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto h = mix(static_cast<std::size_t>(Op::Atom), std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(
      Node{Op::Atom, std::move(name), {}, h, 1, 0}));
}

Formula Formula::constant(bool value) {
  // Two shared leaves; the default constructor must not recurse.
  static const auto t = std::make_shared<const Node>(
      Node{Op::True, {}, {}, mix(static_cast<std::size_t>(Op::True), 1), 1, 0});
  static const auto f = std::make_shared<const Node>(
      Node{Op::False, {}, {}, mix(static_cast<std::size_t>(Op::False), 2), 1, 0});
  return Formula(value ? t : f);
}

Formula Formula::unary(Op op, Formula operand) {
  if (arity(op) != 1) throw std::invalid_argument("operator is not unary");
  auto h = mix(static_cast<std::size_t>(op) * 31, operand.hash());
  auto size = operand.size() + 1;
  auto depth = operand.depth() + 1;
  return Formula(std::make_shared<const Node>(
      Node{op, {}, {std::move(operand)}, h, size, depth}));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  if (arity(op) != 2) throw std::invalid_argument("operator is not binary");
  auto h = mix(mix(static_cast<std::size_t>(op) * 131, lhs.hash()), rhs.hash());
  auto size = lhs.size() + rhs.size() + 1;
  auto depth = std::max(lhs.depth(), rhs.depth()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{op, {}, {std::move(lhs), std::move(rhs)}, h, size, depth}));
}

Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }
const Formula& Formula::child(std::size_t i) const noexcept { return node_->kids[i]; }
std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::depth() const noexcept { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->op != b.node_->op ||
      a.node_->size != b.node_->size) {
    return false;
  }
  switch (arity(a.op())) {
    case 0:
      return a.node_->name == b.node_->name;
    case 1:
      return a.child(0) == b.child(0);
    default:
      return a.child(0) == b.child(0) && a.child(1) == b.child(1);
  }
}

int compare(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  switch (arity(a.op())) {
    case 0:
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    case 1:
      return compare(a.child(0), b.child(0));
    default:
      if (int c = compare(a.child(0), b.child(0)); c != 0) return c;
      return compare(a.child(1), b.child(1));
  }
}

Formula atom(std::string name) { return Formula::atom(std::move(name)); }
Formula top() { return Formula::constant(true); }
Formula bottom() { return Formula::constant(false); }
Formula neg(Formula f) { return Formula::unary(Op::Not, std::move(f)); }
Formula conj(Formula a, Formula b) { return Formula::binary(Op::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return Formula::binary(Op::Or, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) { return Formula::binary(Op::Implies, std::move(a), std::move(b)); }
Formula iff(Formula a, Formula b) { return Formula::binary(Op::Iff, std::move(a), std::move(b)); }
Formula next(Formula f) { return Formula::unary(Op::Next, std::move(f)); }
Formula always(Formula f) { return Formula::unary(Op::Always, std::move(f)); }
Formula eventually(Formula f) { return Formula::unary(Op::Eventually, std::move(f)); }
Formula until(Formula a, Formula b) { return Formula::binary(Op::Until, std::move(a), std::move(b)); }
Formula rise(Formula f) { return Formula::unary(Op::Rise, std::move(f)); }
Formula fall(Formula f) { return Formula::unary(Op::Fall, std::move(f)); }
Formula any_edge(Formula f) { return Formula::unary(Op::AnyEdge, std::move(f)); }

AtomSet::AtomSet(std::initializer_list<std::string> names) {
  for (const auto& n : names) {
    if (!add(n)) throw std::invalid_argument("duplicate atom '" + n + "'");
  }
}

AtomSet::AtomSet(std::vector<std::string> names) {
  for (auto& n : names) {
    if (!add(n)) throw std::invalid_argument("duplicate atom '" + n + "'");
  }
}

bool AtomSet::add(std::string name) {
  if (contains(name)) return false;
  names_.push_back(std::move(name));
  return true;
}

bool AtomSet::contains(std::string_view name) const noexcept {
  return index_of(name).has_value();
}

std::optional<std::size_t> AtomSet::index_of(std::string_view name) const noexcept {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

namespace {

void collect_atoms(const Formula& f, AtomSet& out) {
  if (f.is_atom()) {
    out.add(f.name());
    return;
  }
  for (int i = 0; i < arity(f.op()); ++i) collect_atoms(f.child(i), out);
}

}  // namespace

AtomSet atoms_of(const Formula& f) {
  AtomSet out;
  collect_atoms(f, out);
  return out;
}

bool contains_op(const Formula& f, Op op) {
  if (f.op() == op) return true;
  for (int i = 0; i < arity(f.op()); ++i) {
    if (contains_op(f.child(i), op)) return true;
  }
  return false;
}

bool is_next_free(const Formula& f) { return !contains_op(f, Op::Next); }

bool is_edge_free(const Formula& f) {
  return !contains_op(f, Op::Rise) && !contains_op(f, Op::Fall) &&
         !contains_op(f, Op::AnyEdge);
}

namespace {

void flatten_into(const Formula& f, Op op, std::vector<Formula>& out) {
  if (f.op() == op) {
    flatten_into(f.lhs(), op, out);
    flatten_into(f.rhs(), op, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

std::vector<Formula> flatten(const Formula& f, Op op) {
  std::vector<Formula> out;
  flatten_into(f, op, out);
  return out;
}

Formula build(Op op, std::span<const Formula> items) {
  if (op != Op::And && op != Op::Or) {
    throw std::invalid_argument("build expects And or Or");
  }
  if (items.empty()) return Formula::constant(op == Op::And);
  Formula acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) {
    acc = Formula::binary(op, items[i], acc);
  }
  return acc;
}

Formula replace_all(const Formula& f, const Formula& from, const Formula& to) {
  if (f == from) return to;
  switch (arity(f.op())) {
    case 0:
      return f;
    case 1: {
      auto c = replace_all(f.operand(), from, to);
      return c.identity() == f.operand().identity() ? f : Formula::unary(f.op(), c);
    }
    default: {
      auto l = replace_all(f.lhs(), from, to);
      auto r = replace_all(f.rhs(), from, to);
      if (l.identity() == f.lhs().identity() && r.identity() == f.rhs().identity()) {
        return f;
      }
      return Formula::binary(f.op(), l, r);
    }
  }
}

Formula substitute(const Formula& f,
                   const std::vector<std::pair<std::string, Formula>>& binding) {
  switch (arity(f.op())) {
    case 0:
      if (f.is_atom()) {
        for (const auto& [name, value] : binding) {
          if (name == f.name()) return value;
        }
      }
      return f;
    case 1:
      return Formula::unary(f.op(), substitute(f.operand(), binding));
    default:
      return Formula::binary(f.op(), substitute(f.lhs(), binding),
                             substitute(f.rhs(), binding));
  }
}

}  // namespace edgeltl
