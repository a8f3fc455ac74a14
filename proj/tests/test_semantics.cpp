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

State st(std::initializer_list<bool> v) { return State(std::vector<bool>(v)); }

LassoTrace trace_a(std::vector<State> stem, std::vector<State> loop) {
  return LassoTrace(AtomSet{"a"}, std::move(stem), std::move(loop));
}

}  // namespace

TEST_CASE("eval examples") {
  CHECK_FALSE(eval(parse("X a"), trace_a({st({true})}, {st({false})})));
  CHECK(eval(parse("X a"), trace_a({st({true}), st({true})}, {st({false})})));
  LassoTrace ab(AtomSet{"a", "b"}, {st({true, false})}, {st({false, true})});
  CHECK(eval(parse("a U b"), ab));
  CHECK(eval(parse("G a"), trace_a({}, {st({true})})));
  CHECK(eval(parse("F up a"), trace_a({}, {st({false}), st({true})})));
  CHECK_FALSE(eval(parse("F up a"), trace_a({}, {st({true})})));
}

TEST_CASE("eval at positions and strong until") {
  auto t = trace_a({st({false})}, {st({true}), st({false})});
  CHECK_FALSE(eval(parse("a"), t, 0));
  CHECK(eval(parse("a"), t, 1));
  CHECK(eval(parse("a"), t, 3));
  CHECK_FALSE(eval(parse("a"), t, 4));
  CHECK_FALSE(eval(parse("a U false"), t));
  CHECK(eval(parse("G F a"), t));
  CHECK_FALSE(eval(parse("F G a"), t));
  CHECK(eval(parse("edge a"), t));
  CHECK(eval(parse("down a"), t, 1));
}

TEST_CASE("eval rejects unknown atoms") {
  auto t = trace_a({}, {st({true})});
  CHECK_THROWS_AS(eval(parse("a & b"), t), UnknownAtomError);
  try {
    eval(parse("zz"), t);
  } catch (const UnknownAtomError& e) {
    CHECK(e.atom() == "zz");
  }
  CHECK_THROWS_AS(eval_oracle(parse("b"), t), UnknownAtomError);
}

TEST_CASE("lasso validation") {
  CHECK_THROWS_AS(trace_a({st({true})}, {}), std::invalid_argument);
  CHECK_THROWS_AS(trace_a({st({true, false})}, {st({true})}), std::invalid_argument);
  auto t = trace_a({st({true})}, {st({false}), st({true})});
  CHECK(t.period_end() == 3);
  CHECK(t.fold(5) == 1);
  CHECK(t.fold(4) == 2);
}

TEST_CASE("stutter_at") {
  auto t = trace_a({st({true})}, {st({false})});
  auto s = stutter_at(t, 0);
  CHECK(s.stem() == std::vector<State>{st({true}), st({true})});
  CHECK(s.loop() == t.loop());
  auto u = trace_a({st({true}), st({false})}, {st({false})});
  CHECK(stutter_at(u, 1).stem() == std::vector<State>{st({true}), st({false}), st({false})});
  CHECK_THROWS_AS(stutter_at(t, 1), std::out_of_range);
  CHECK_THROWS_AS(stutter_at(trace_a({}, {st({true})}), 0), std::out_of_range);
}

TEST_CASE("unroll") {
  auto x = st({true});
  auto t = trace_a({}, {x});
  CHECK(unroll(t, 2).stem() == std::vector<State>{x, x});
  CHECK(unroll(t, 0) == t);
}

TEST_CASE("eval agrees with the labelling oracle") {
  const auto traces = testing::all_lassos(AtomSet{"a", "b"}, 3, 2);
  testing::FormulaGen gen(3, {.max_depth = 4});
  for (int i = 0; i < 300; ++i) {
    auto f = gen();
    CAPTURE(render(f));
    for (const auto& t : traces) REQUIRE(eval(f, t) == eval_oracle(f, t));
  }
}

TEST_CASE("suffix periodicity and unroll invariance") {
  const auto traces = testing::all_lassos(AtomSet{"a", "b"}, 2, 2);
  testing::FormulaGen gen(5, {.max_depth = 4});
  for (int i = 0; i < 100; ++i) {
    auto f = gen();
    CAPTURE(render(f));
    for (const auto& t : traces) {
      for (std::size_t p = t.stem_length(); p < t.period_end(); ++p) {
        REQUIRE(eval(f, t, p) == eval(f, t, p + t.loop_length()));
      }
      for (std::size_t k = 0; k <= 3; ++k) REQUIRE(eval(f, unroll(t, k)) == eval(f, t));
    }
  }
}

TEST_CASE("stuttering never changes next-free, edge-free formulas") {
  const auto traces = testing::all_lassos(AtomSet{"a", "b"}, 3, 2);
  testing::FormulaGen gen(9, {.max_depth = 4, .next = false, .edges = false});
  for (int i = 0; i < 100; ++i) {
    auto f = gen();
    CAPTURE(render(f));
    for (const auto& t : traces) {
      for (std::size_t s = 0; s < t.stem_length(); ++s) {
        REQUIRE(eval(f, t) == eval(f, stutter_at(t, s)));
      }
    }
  }
}

TEST_CASE("edge operators match their definitions") {
  const auto traces = testing::all_lassos(AtomSet{"a"}, 3, 2);
  auto a = atom("a");
  for (const auto& t : traces) {
    CHECK(eval(rise(a), t) == eval(conj(neg(a), next(a)), t));
    CHECK(eval(fall(a), t) == eval(conj(a, next(neg(a))), t));
    CHECK(eval(any_edge(a), t) == eval(disj(rise(a), fall(a)), t));
    CHECK(eval(rise(neg(a)), t) == eval(fall(a), t));
    CHECK(eval(fall(neg(a)), t) == eval(rise(a), t));
    CHECK(eval(any_edge(neg(a)), t) == eval(any_edge(a), t));
  }
}
