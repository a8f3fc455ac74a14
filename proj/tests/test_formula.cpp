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

#include <stdexcept>
#include <unordered_set>

#include "edgeltl/formula.hpp"
#include "edgeltl/syntax.hpp"

using namespace edgeltl;

TEST_CASE("atoms_of collects names in first-occurrence order") {
  CHECK(atoms_of(parse("G(a -> F b)")).names() == std::vector<std::string>{"a", "b"});
  CHECK(atoms_of(top()).empty());
  CHECK(atoms_of(parse("up a & X a")).names() == std::vector<std::string>{"a"});
  CHECK(atoms_of(parse("c U (b | c & a)")).names() == std::vector<std::string>{"c", "b", "a"});
}

TEST_CASE("structural equality and hashing") {
  auto f = conj(atom("a"), next(atom("b")));
  auto g = parse("a & X b");
  CHECK(f == g);
  CHECK(f.hash() == g.hash());
  CHECK_FALSE(f == parse("a & X a"));
  CHECK(compare(f, g) == 0);
  CHECK((compare(atom("a"), atom("b")) < 0) == !(compare(atom("b"), atom("a")) < 0));

  std::unordered_set<Formula> set{f, g, atom("a")};
  CHECK(set.size() == 2);
}

TEST_CASE("default formula is true; constants are shared leaves") {
  Formula f;
  CHECK(f.is(Op::True));
  CHECK(top() == Formula::constant(true));
  CHECK(bottom().is(Op::False));
}

TEST_CASE("size and depth") {
  auto f = parse("G(a -> F b)");
  CHECK(f.size() == 5);
  CHECK(f.depth() == 3);
  CHECK(atom("a").depth() == 0);
}

TEST_CASE("atom names are validated") {
  CHECK_THROWS_AS(atom(""), std::invalid_argument);
  CHECK_THROWS_AS(atom("Abc"), std::invalid_argument);
  CHECK_THROWS_AS(atom("up"), std::invalid_argument);
  CHECK_THROWS_AS(atom("9a"), std::invalid_argument);
  CHECK(atom("pos_above_tbl").name() == "pos_above_tbl");
}

TEST_CASE("operator arity and classes") {
  CHECK(arity(Op::Atom) == 0);
  CHECK(arity(Op::Next) == 1);
  CHECK(arity(Op::Until) == 2);
  CHECK(is_edge(Op::Fall));
  CHECK_FALSE(is_edge(Op::Next));
  CHECK(is_binary_boolean(Op::Iff));
  CHECK_FALSE(is_binary_boolean(Op::Until));
}

TEST_CASE("AtomSet keeps order and rejects duplicates") {
  AtomSet s{"b", "a"};
  CHECK(s.index_of("a") == 1);
  CHECK_FALSE(s.index_of("c").has_value());
  CHECK_FALSE(s.add("a"));
  CHECK(s.add("c"));
  CHECK(s.names() == std::vector<std::string>{"b", "a", "c"});
  CHECK_THROWS_AS((AtomSet{"a", "a"}), std::invalid_argument);
}

TEST_CASE("flatten and build") {
  auto f = parse("(a & b) & (c & d)");
  auto items = flatten(f, Op::And);
  REQUIRE(items.size() == 4);
  CHECK(items[2] == atom("c"));
  CHECK(build(Op::And, items) == parse("a & (b & (c & d))"));
  CHECK(build(Op::And, {}) == top());
  CHECK(build(Op::Or, {}) == bottom());
  CHECK(flatten(atom("a"), Op::Or).size() == 1);
}

TEST_CASE("queries on operators") {
  CHECK(is_next_free(parse("G(a U b)")));
  CHECK_FALSE(is_next_free(parse("G X a")));
  CHECK(is_edge_free(parse("X a")));
  CHECK_FALSE(is_edge_free(parse("F edge a")));
  CHECK(contains_op(parse("a & (b -> c)"), Op::Implies));
}

TEST_CASE("replace_all and substitute") {
  auto f = parse("G(down h -> F down h)");
  CHECK(replace_all(f, parse("down h"), parse("up !h")) == parse("G(up !h -> F up !h)"));
  auto g = substitute(parse("F(p & X q)"), {{"p", parse("up a")}, {"q", parse("b U c")}});
  CHECK(g == parse("F(up a & X(b U c))"));
  CHECK(substitute(parse("p"), {{"q", atom("z")}}) == atom("p"));
}
