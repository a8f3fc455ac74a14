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

#include "edgeltl/rewrite.hpp"

#include <functional>

namespace edgeltl {

namespace {

// Rebuilds f with each child passed through fn; returns f itself when no
// child changed so that sharing is preserved.
Formula map_children(const Formula& f, const std::function<Formula(const Formula&)>& fn) {
  switch (arity(f.op())) {
    case 0:
      return f;
    case 1: {
      auto c = fn(f.operand());
      return c == f.operand() ? f : Formula::unary(f.op(), c);
    }
    default: {
      auto l = fn(f.lhs());
      auto r = fn(f.rhs());
      return (l == f.lhs() && r == f.rhs()) ? f : Formula::binary(f.op(), l, r);
    }
  }
}

}  // namespace

Formula negate(const Formula& f) {
  return f.is(Op::Not) ? f.operand() : neg(f);
}

Formula desugar_edges(const Formula& f) {
  auto g = map_children(f, desugar_edges);
  switch (g.op()) {
    case Op::Rise: {
      const auto& a = g.operand();
      return conj(neg(a), next(a));
    }
    case Op::Fall: {
      const auto& a = g.operand();
      return conj(a, next(neg(a)));
    }
    case Op::AnyEdge: {
      const auto& a = g.operand();
      return disj(conj(neg(a), next(a)), conj(a, next(neg(a))));
    }
    default:
      return g;
  }
}

namespace {

std::optional<Formula> edge_of_pair(const Formula& x, const Formula& y) {
  // !A with X A
  if (x.is(Op::Not) && y.is(Op::Next) && y.operand() == x.operand()) {
    return rise(x.operand());
  }
  // A with X !A
  if (y.is(Op::Next) && y.operand().is(Op::Not) && y.operand().operand() == x) {
    return fall(x);
  }
  return std::nullopt;
}

Formula rebuild_same_shape(const Formula& f, const std::vector<Formula>& leaves,
                           std::size_t& next_leaf) {
  if (!f.is(Op::And)) return leaves[next_leaf++];
  auto l = rebuild_same_shape(f.lhs(), leaves, next_leaf);
  auto r = rebuild_same_shape(f.rhs(), leaves, next_leaf);
  return (l == f.lhs() && r == f.rhs()) ? f : conj(l, r);
}

}  // namespace

Formula resugar_edges(const Formula& f) {
  if (!f.is(Op::And)) return map_children(f, resugar_edges);

  auto items = flatten(f, Op::And);
  for (auto& item : items) item = resugar_edges(item);

  bool paired = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < items.size() && !progress; ++i) {
      for (std::size_t j = 0; j < items.size() && !progress; ++j) {
        if (i == j) continue;
        if (auto e = edge_of_pair(items[i], items[j])) {
          std::size_t keep = std::min(i, j);
          std::size_t drop = std::max(i, j);
          items[keep] = *e;
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(drop));
          paired = progress = true;
        }
      }
    }
  }
  if (paired) return build(Op::And, items);
  std::size_t cursor = 0;
  return rebuild_same_shape(f, items, cursor);
}

Formula expand_any_edge(const Formula& f) {
  auto g = map_children(f, expand_any_edge);
  if (g.is(Op::AnyEdge)) return disj(rise(g.operand()), fall(g.operand()));
  return g;
}

namespace {

std::optional<Formula> dual_step(const Formula& g) {
  if (is_edge(g.op()) && g.operand().is(Op::Not)) {
    const auto& a = g.operand().operand();
    switch (g.op()) {
      case Op::Rise: return fall(a);
      case Op::Fall: return rise(a);
      default: return any_edge(a);
    }
  }
  return std::nullopt;
}

}  // namespace

Formula normalize_edge_duals(const Formula& f) {
  auto g = map_children(f, normalize_edge_duals);
  while (auto h = dual_step(g)) g = *h;
  return g;
}

namespace {

std::optional<Formula> logic_step(const Formula& g) {
  if (g.is(Op::Not) && g.operand().is(Op::Not)) return g.operand().operand();
  if (auto d = dual_step(g)) return d;

  if (g.is(Op::Always)) {
    const auto& body = g.operand();
    if (body.is(Op::And)) return conj(always(body.lhs()), always(body.rhs()));
    if (body.is(Op::Implies)) {
      const auto& x = body.lhs();
      const auto& y = body.rhs();
      if (y.is(Op::And)) {
        return conj(always(implies(x, y.lhs())), always(implies(x, y.rhs())));
      }
      if (y.is(Op::Not)) return neg(eventually(conj(x, y.operand())));
    }
    if (body.is(Op::Not) && body.operand().is(Op::Or)) {
      const auto& inner = body.operand();
      return always(conj(negate(inner.lhs()), negate(inner.rhs())));
    }
  }
  if (g.is(Op::Eventually)) {
    const auto& body = g.operand();
    if (body.is(Op::Or)) return disj(eventually(body.lhs()), eventually(body.rhs()));
    if (body.is(Op::Not) && body.operand().is(Op::And)) {
      const auto& inner = body.operand();
      return eventually(disj(negate(inner.lhs()), negate(inner.rhs())));
    }
  }
  return std::nullopt;
}

}  // namespace

Formula rewrite_logic(const Formula& f) {
  auto g = map_children(f, rewrite_logic);
  if (auto h = logic_step(g)) return rewrite_logic(*h);
  return g;
}

namespace {

// Boolean structure with negation pushed to literals.
struct Bool {
  enum class Kind { Lit, And, Or, True, False } kind;
  Formula lit;
  std::vector<Bool> kids;
};

bool is_boolean_root(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Implies || op == Op::Iff ||
         op == Op::Not || op == Op::True || op == Op::False;
}

Bool to_bool(const Formula& f, bool positive) {
  using K = Bool::Kind;
  switch (f.op()) {
    case Op::True:
      return {positive ? K::True : K::False, {}, {}};
    case Op::False:
      return {positive ? K::False : K::True, {}, {}};
    case Op::Not:
      if (is_boolean_root(f.operand().op())) return to_bool(f.operand(), !positive);
      return {K::Lit, positive ? f : f.operand(), {}};
    case Op::And:
      return {positive ? K::And : K::Or, {},
              {to_bool(f.lhs(), positive), to_bool(f.rhs(), positive)}};
    case Op::Or:
      return {positive ? K::Or : K::And, {},
              {to_bool(f.lhs(), positive), to_bool(f.rhs(), positive)}};
    case Op::Implies:
      return {positive ? K::Or : K::And, {},
              {to_bool(f.lhs(), !positive), to_bool(f.rhs(), positive)}};
    case Op::Iff: {
      // (x -> y) & (y -> x), negated: (x & !y) | (!x & y)
      Bool a{K::Or, {}, {to_bool(f.lhs(), false), to_bool(f.rhs(), true)}};
      Bool b{K::Or, {}, {to_bool(f.lhs(), true), to_bool(f.rhs(), false)}};
      if (positive) return {K::And, {}, {a, b}};
      Bool c{K::And, {}, {to_bool(f.lhs(), true), to_bool(f.rhs(), false)}};
      Bool d{K::And, {}, {to_bool(f.lhs(), false), to_bool(f.rhs(), true)}};
      return {K::Or, {}, {c, d}};
    }
    default:
      return {K::Lit, positive ? f : neg(f), {}};
  }
}

// Clauses for CNF (outer = And, inner = Or); terms for DNF with the roles
// of And/Or swapped.
std::optional<NormalForm> expand(const Bool& b, Bool::Kind outer, std::size_t limit) {
  using K = Bool::Kind;
  const K inner = outer == K::And ? K::Or : K::And;
  const K unit_outer = outer == K::And ? K::True : K::False;  // empty list
  switch (b.kind) {
    case K::Lit:
      return NormalForm{{b.lit}};
    case K::True:
    case K::False:
      if (b.kind == unit_outer) return NormalForm{};
      return NormalForm{{}};
    default:
      break;
  }
  auto l = expand(b.kids[0], outer, limit);
  auto r = expand(b.kids[1], outer, limit);
  if (!l || !r) return std::nullopt;
  if (b.kind == outer) {
    if (l->size() + r->size() > limit) return std::nullopt;
    l->insert(l->end(), r->begin(), r->end());
    return l;
  }
  (void)inner;
  if (l->size() * r->size() > limit) return std::nullopt;
  NormalForm out;
  for (const auto& x : *l) {
    for (const auto& y : *r) {
      auto merged = x;
      merged.insert(merged.end(), y.begin(), y.end());
      out.push_back(std::move(merged));
    }
  }
  return out;
}

}  // namespace

std::optional<NormalForm> to_cnf(const Formula& f, std::size_t limit) {
  return expand(to_bool(f, true), Bool::Kind::And, limit);
}

std::optional<NormalForm> to_dnf(const Formula& f, std::size_t limit) {
  return expand(to_bool(f, true), Bool::Kind::Or, limit);
}

}  // namespace edgeltl
