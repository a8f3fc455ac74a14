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


#include <doctest.h>

#include "edgeltl/rewrite.hpp"
#include "edgeltl/semantics.hpp"
#include "edgeltl/syntax.hpp"
#include "support/random_formula.hpp"

using namespace edgeltl;

namespace {

const std::vector<LassoTrace>& two_atom_lassos() {
  static const auto traces = testing::all_lassos(AtomSet{"a", "b"}, 3, 2);
  return traces;
}

bool equivalent_on_lassos(const Formula& f, const Formula& g) {
  for (const auto& t : two_atom_lassos()) {
    if (eval(f, t) != eval(g, t)) return false;
  }
  return true;
}

Formula conj_list(const Formula& f) { return build(Op::And, flatten(f, Op::And)); }

}  // namespace

TEST_CASE("desugar_edges") {
  CHECK(desugar_edges(parse("up a")) == parse("!a & X a"));
  CHECK(desugar_edges(parse("down a")) == parse("a & X !a"));
  CHECK(desugar_edges(parse("edge a")) == parse("(!a & X a) | (a & X !a)"));
  CHECK(desugar_edges(parse("G b")) == parse("G b"));
  CHECK(is_edge_free(desugar_edges(parse("F(up down a U edge b)"))));
}

TEST_CASE("resugar_edges") {
  CHECK(resugar_edges(parse("!a & X a")) == parse("up a"));
  CHECK(resugar_edges(parse("a & X !a")) == parse("down a"));
  CHECK(resugar_edges(parse("!a & X b")) == parse("!a & X b"));
  CHECK(resugar_edges(parse("F(!a & X a & X b)")) == parse("F(up a & X b)"));
  // Pairs are found anywhere in the AC view of a conjunction.
  CHECK(resugar_edges(parse("X a & (c & !a)")) == conj_list(parse("up a & c")));
  CHECK(resugar_edges(parse("up a")) == parse("up a"));
}

TEST_CASE("resugar undoes desugar on single edges") {
  for (const char* text : {"up a", "down a", "G(up a -> F down b)"}) {
    auto f = parse(text);
    CHECK(resugar_edges(desugar_edges(f)) == f);
  }
}

TEST_CASE("rewrite_logic examples") {
  CHECK(rewrite_logic(parse("G(p -> q & r)")) == parse("G(p -> q) & G(p -> r)"));
  CHECK(rewrite_logic(parse("up !a")) == parse("down a"));
  CHECK(rewrite_logic(parse("down !a")) == parse("up a"));
  CHECK(rewrite_logic(parse("edge !a")) == parse("edge a"));
  CHECK(rewrite_logic(parse("!!p")) == parse("p"));
  CHECK(rewrite_logic(parse("G(a & b)")) == parse("G a & G b"));
  CHECK(rewrite_logic(parse("F(a | b)")) == parse("F a | F b"));
  CHECK(rewrite_logic(parse("G(x -> !y)")) == parse("!F(x & y)"));
}

TEST_CASE("normalize_edge_duals") {
  CHECK(normalize_edge_duals(parse("G(up !m -> F down !m)")) == parse("G(down m -> F up m)"));
  CHECK(normalize_edge_duals(parse("edge !!a")) == parse("edge a"));
}

TEST_CASE("negate strips one negation") {
  CHECK(negate(parse("!a")) == parse("a"));
  CHECK(negate(parse("a & b")) == parse("!(a & b)"));
}

TEST_CASE("normal forms") {
  auto cnf = to_cnf(parse("(a & b) | c"));
  REQUIRE(cnf);
  CHECK(cnf->size() == 2);
  auto dnf = to_dnf(parse("(a | b) & X c"));
  REQUIRE(dnf);
  CHECK(dnf->size() == 2);
  CHECK_FALSE(to_cnf(parse("(a & b) | (c & d) | (a & c) | (b & d) | (a & d) | (b & c) | (c & a)"),
                     8)
                  .has_value());
}

TEST_CASE("rewrites preserve meaning on random formulas") {
  testing::FormulaGen gen(11, {.max_depth = 4});
  for (int i = 0; i < 150; ++i) {
    auto f = gen();
    CAPTURE(render(f));
    auto d = desugar_edges(f);
    auto r = rewrite_logic(f);
    auto s = resugar_edges(d);
    CHECK(is_edge_free(d));
    CHECK(equivalent_on_lassos(f, d));
    CHECK(equivalent_on_lassos(f, r));
    CHECK(equivalent_on_lassos(f, s));
    CHECK(equivalent_on_lassos(f, expand_any_edge(f)));
    CHECK(equivalent_on_lassos(f, normalize_edge_duals(f)));
    CHECK(rewrite_logic(r) == r);
    CHECK(resugar_edges(s) == s);
    CHECK(atoms_of(d) == atoms_of(f));
    CHECK(atoms_of(r) == atoms_of(f));
    CHECK(atoms_of(s) == atoms_of(f));
  }
}

TEST_CASE("normal forms preserve meaning") {
  testing::FormulaGen gen(12, {.max_depth = 3});
  for (int i = 0; i < 100; ++i) {
    auto f = gen();
    CAPTURE(render(f));
    if (auto cnf = to_cnf(f)) {
      std::vector<Formula> clauses;
      for (const auto& c : *cnf) clauses.push_back(build(Op::Or, c));
      CHECK(equivalent_on_lassos(f, build(Op::And, clauses)));
    }
    if (auto dnf = to_dnf(f)) {
      std::vector<Formula> terms;
      for (const auto& t : *dnf) terms.push_back(build(Op::And, t));
      CHECK(equivalent_on_lassos(f, build(Op::Or, terms)));
    }
  }
}
