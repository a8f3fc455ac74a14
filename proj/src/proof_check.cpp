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


#include "edgeltl/proof_check.hpp"

#include <algorithm>

#include "edgeltl/rewrite.hpp"
#include "edgeltl/semantics.hpp"
#include "edgeltl/syntax.hpp"

namespace edgeltl {

namespace {

using Bag = std::vector<Formula>;

struct Pieces {
  Bag next;
  Bag rest;

  void sort() {
    std::sort(next.begin(), next.end(), FormulaLess{});
    std::sort(rest.begin(), rest.end(), FormulaLess{});
  }
  bool operator==(const Pieces&) const = default;
};

Formula strip(Formula f) {
  while (f.is(Op::Not) && f.operand().is(Op::Not)) f = f.operand().operand();
  return f;
}

void flat(const Formula& f, Op join, Op unit, Bag& out) {
  auto g = strip(f);
  if (g.is(join)) {
    flat(g.lhs(), join, unit, out);
    flat(g.rhs(), join, unit, out);
  } else if (!g.is(unit)) {
    out.push_back(g);
  }
}

void conj_pieces(const Formula& f, Pieces& out) {
  auto g = strip(f);
  switch (g.op()) {
    case Op::And:
      conj_pieces(g.lhs(), out);
      conj_pieces(g.rhs(), out);
      return;
    case Op::True:
      return;
    case Op::Next:
      flat(g.operand(), Op::And, Op::True, out.next);
      return;
    case Op::Rise:
      conj_pieces(negate(g.operand()), out);
      flat(g.operand(), Op::And, Op::True, out.next);
      return;
    case Op::Fall:
      conj_pieces(g.operand(), out);
      flat(negate(g.operand()), Op::And, Op::True, out.next);
      return;
    case Op::Not:
      if (g.operand().is(Op::Next)) {
        flat(negate(g.operand().operand()), Op::And, Op::True, out.next);
        return;
      }
      break;
    default:
      break;
  }
  out.rest.push_back(g);
}

void disj_pieces(const Formula& f, Pieces& out) {
  auto g = strip(f);
  switch (g.op()) {
    case Op::Or:
      disj_pieces(g.lhs(), out);
      disj_pieces(g.rhs(), out);
      return;
    case Op::False:
      return;
    case Op::Next:
      flat(g.operand(), Op::Or, Op::False, out.next);
      return;
    case Op::Not: {
      const auto& x = g.operand();
      if (x.is(Op::Next)) {
        flat(negate(x.operand()), Op::Or, Op::False, out.next);
        return;
      }
      if (x.is(Op::Rise)) {
        disj_pieces(x.operand(), out);
        flat(negate(x.operand()), Op::Or, Op::False, out.next);
        return;
      }
      if (x.is(Op::Fall)) {
        disj_pieces(negate(x.operand()), out);
        flat(x.operand(), Op::Or, Op::False, out.next);
        return;
      }
      break;
    }
    default:
      break;
  }
  out.rest.push_back(g);
}

// Removes the first item equal to `target`; false if none.
bool take(Bag& items, const Formula& target) {
  auto it = std::find(items.begin(), items.end(), target);
  if (it == items.end()) return false;
  items.erase(it);
  return true;
}


Bag disjunct_items(const Formula& body) {
  if (!body.is(Op::Implies)) return flatten(body, Op::Or);
  Bag items;
  for (const auto& c : flatten(body.lhs(), Op::And)) items.push_back(negate(c));
  for (const auto& d : flatten(body.rhs(), Op::Or)) items.push_back(d);
  return items;
}

Pieces conj_side(const Bag& items) {
  Pieces p;
  for (const auto& it : items) conj_pieces(it, p);
  p.sort();
  return p;
}

Pieces disj_side(const Bag& items) {
  Pieces p;
  for (const auto& it : items) disj_pieces(it, p);
  p.sort();
  return p;
}

// up A & X B & C
bool conj_schema_matches(const Formula& conj, const Formula& a, const Formula& b,
                         const Formula& c) {
  auto items = flatten(conj, Op::And);
  if (!take(items, rise(a))) return false;
  return conj_side(items) == conj_side({next(b), c});
}

// !up A | X B | C
bool disj_schema_matches(Bag items, const Formula& a, const Formula& b, const Formula& c) {
  if (!take(items, neg(rise(a)))) return false;
  return disj_side(items) == disj_side({next(b), c});
}

// Whether a and b differ only by down X written as up !X.
bool dual_equal(const Formula& a, const Formula& b) {
  if (a.is(Op::Fall) && b.is(Op::Rise) && b.operand().is(Op::Not)) {
    if (dual_equal(a.operand(), b.operand().operand())) return true;
  }
  if (b.is(Op::Fall) && a.is(Op::Rise) && a.operand().is(Op::Not)) {
    if (dual_equal(b.operand(), a.operand().operand())) return true;
  }
  if (a.op() != b.op()) return false;
  if (a.is_atom()) return a.name() == b.name();
  for (int i = 0; i < arity(a.op()); ++i) {
    if (!dual_equal(a.child(i), b.child(i))) return false;
  }
  return true;
}

std::vector<State> all_states(std::size_t n) {
  std::vector<State> out;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<bool> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = (code >> (n - 1 - k)) & 1;
    out.emplace_back(std::move(v));
  }
  return out;
}

void sequences(const std::vector<State>& states, std::size_t max_len, std::size_t min_len,
               std::vector<std::vector<State>>& out) {
  std::vector<std::vector<State>> layer{{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::vector<State>> grown;
    for (const auto& s : layer) {
      for (const auto& st : states) {
        auto t = s;
        t.push_back(st);
        grown.push_back(std::move(t));
      }
    }
    layer = std::move(grown);
  }
}

// Exhaustive agreement on every lasso within a size budget that shrinks
// with the number of atoms.
bool bounded_equivalent(const Formula& a, const Formula& b) {
  AtomSet atoms;
  for (const auto& n : atoms_of(a)) atoms.add(n);
  for (const auto& n : atoms_of(b)) atoms.add(n);
  const std::size_t n = atoms.size();
  const std::size_t max_stem = n <= 2 ? 3 : n == 3 ? 2 : 1;
  const std::size_t max_loop = n <= 3 ? 2 : 1;
  auto states = all_states(n);
  std::vector<std::vector<State>> stems, loops;
  sequences(states, max_stem, 0, stems);
  sequences(states, max_loop, 1, loops);
  for (const auto& s : stems) {
    for (const auto& l : loops) {
      LassoTrace t(atoms, s, l);
      if (eval(a, t) != eval(b, t)) return false;
    }
  }
  return true;
}

class Checker {
 public:
  std::optional<std::string> check(const ProofTree& p) {
    if (auto e = check_node(p)) {
      return std::string(to_string(p.rule)) + " at " + render(p.conclusion) + ": " + *e;
    }
    for (const auto& q : p.premises) {
      if (auto e = check(q)) return e;
    }
    return std::nullopt;
  }

 private:
  std::optional<std::string> check_node(const ProofTree& p) {
    const auto& c = p.conclusion;
    std::vector<Formula> prem;
    for (const auto& q : p.premises) prem.push_back(q.conclusion);

    auto want = [&](std::size_t n) -> std::optional<std::string> {
      if (prem.size() != n) {
        return "expected " + std::to_string(n) + " premises, got " +
               std::to_string(prem.size());
      }
      return std::nullopt;
    };
    auto fail = [](const char* why) { return std::optional<std::string>(why); };

    switch (p.rule) {
      case RuleName::CusVar:
        if (auto e = want(0)) return e;
        return c.is_atom() ? std::nullopt : fail("conclusion is not an atom");
      case RuleName::CusConst:
        if (auto e = want(0)) return e;
        return c.is_constant() ? std::nullopt : fail("conclusion is not a constant");
      case RuleName::CusNot:
        return unary(c, Op::Not, prem);
      case RuleName::CusAlways:
        return unary(c, Op::Always, prem);
      case RuleName::CusEvent:
        return unary(c, Op::Eventually, prem);
      case RuleName::CusAnd:
        if (!c.is(Op::And)) return fail("conclusion is not a conjunction");
        return binary(c, prem);
      case RuleName::CusBinop:
        if (!c.is(Op::Or) && !c.is(Op::Implies) && !c.is(Op::Iff)) {
          return fail("conclusion is not a binary connective");
        }
        return binary(c, prem);
      case RuleName::CusUntil:
        if (!c.is(Op::Until)) return fail("conclusion is not an until");
        return binary(c, prem);
      case RuleName::ThmMain: {
        if (auto e = want(2)) return e;
        if (!c.is(Op::Eventually)) return fail("conclusion is not an eventually");
        auto items = flatten(c.operand(), Op::And);
        if (!take(items, neg(prem[0])) || !take(items, next(prem[0]))) {
          return fail("missing !A or X A conjunct");
        }
        auto got = conj_side(items);
        auto expected = conj_side({next(prem[1])});
        return got == expected ? std::nullopt : fail("remaining conjuncts are not X B");
      }
      case RuleName::PropE:
        if (auto e = want(3)) return e;
        if (!c.is(Op::Eventually)) return fail("conclusion is not an eventually");
        if (!conj_schema_matches(c.operand(), prem[0], prem[1], prem[2])) {
          return fail("body is not up A & X B & C");
        }
        return std::nullopt;
      case RuleName::PropA:
        if (auto e = want(3)) return e;
        if (!c.is(Op::Always)) return fail("conclusion is not an always");
        if (!disj_schema_matches(disjunct_items(c.operand()), prem[0], prem[1], prem[2])) {
          return fail("body is not up A -> X B | C");
        }
        return std::nullopt;
      case RuleName::PropU: {
        if (prem.size() != 6 && prem.size() != 4) return fail("expected 6 or 4 premises");
        if (!c.is(Op::Until)) return fail("conclusion is not an until");
        if (!disj_schema_matches(flatten(c.lhs(), Op::Or), prem[0], prem[1], prem[2])) {
          return fail("left operand is not !up A | X B | C");
        }
        if (prem.size() == 4) {
          return c.rhs() == prem[3] ? std::nullopt : fail("right operand is not F");
        }
        if (!conj_schema_matches(c.rhs(), prem[3], prem[4], prem[5])) {
          return fail("right operand is not up D & X E & F");
        }
        return std::nullopt;
      }
      case RuleName::EdgeDual:
        if (auto e = want(1)) return e;
        return dual_equal(c, prem[0]) ? std::nullopt
                                      : fail("premise is not an edge-dual rewriting");
      case RuleName::LogicRewrite:
        if (auto e = want(1)) return e;
        return bounded_equivalent(c, prem[0]) ? std::nullopt
                                              : fail("premise is not equivalent");
    }
    return fail("unknown rule");
  }

  static std::optional<std::string> unary(const Formula& c, Op op,
                                          const std::vector<Formula>& prem) {
    if (!c.is(op)) return "conclusion has the wrong connective";
    if (prem.size() != 1) return "expected 1 premise";
    if (!(prem[0] == c.operand())) return "premise is not the operand";
    return std::nullopt;
  }

  static std::optional<std::string> binary(const Formula& c,
                                           const std::vector<Formula>& prem) {
    if (prem.size() != 2) return "expected 2 premises";
    if (!(prem[0] == c.lhs()) || !(prem[1] == c.rhs())) {
      return "premises are not the operands";
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::string> check_proof(const ProofTree& p) { return Checker{}.check(p); }

}  // namespace edgeltl
