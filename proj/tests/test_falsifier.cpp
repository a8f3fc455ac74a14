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

#include "edgeltl/falsifier.hpp"
#include "edgeltl/syntax.hpp"
#include "support/random_formula.hpp"

using namespace edgeltl;

namespace {

State st(std::initializer_list<bool> v) { return State(std::vector<bool>(v)); }

// States in search order: all-true first, first atom most significant.
std::vector<State> ordered_states(std::size_t n) {
  std::vector<State> out;
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t e = 0; e < count; ++e) {
    const std::size_t bits = count - 1 - e;
    std::vector<bool> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = (bits >> (n - 1 - k)) & 1;
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<State>> ordered_sequences(std::size_t n, std::size_t lo,
                                                  std::size_t hi) {
  const auto states = ordered_states(n);
  std::vector<std::vector<State>> out, layer{{}};
  for (std::size_t len = 0; len <= hi; ++len) {
    if (len >= lo) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::vector<State>> next;
    for (const auto& s : layer) {
      for (const auto& x : states) {
        auto g = s;
        g.push_back(x);
        next.push_back(std::move(g));
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Direct transcription of the documented search order using eval and
// stutter_at only.
std::optional<Counterexample> brute_force(const Formula& f, const SearchBounds& b) {
  const AtomSet atoms = search_atoms(f);
  for (const auto& stem : ordered_sequences(atoms.size(), 0, b.max_stem)) {
    for (const auto& loop : ordered_sequences(atoms.size(), 1, b.max_loop)) {
      LassoTrace t(atoms, stem, loop);
      for (std::size_t k = 0; k <= b.max_unroll; ++k) {
        auto u = unroll(t, k);
        const bool before = eval(f, u);
        for (std::size_t i = 0; i < u.stem_length(); ++i) {
          const bool after = eval(f, stutter_at(u, i));
          if (after != before) return Counterexample{u, i, before, after};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("next a: minimized counterexample") {
  auto f = parse("X a");
  auto c = falsify(f);
  REQUIRE(c);
  CHECK(is_valid_counterexample(*c, f));
  auto m = minimize(*c, f);
  CHECK(m.trace.stem() == std::vector<State>{st({true})});
  CHECK(m.trace.loop() == std::vector<State>{st({false})});
  CHECK(m.stutter_index == 0);
  CHECK_FALSE(m.value_before);
  CHECK(m.value_after);
  CHECK(minimize(m, f) == m);
}

TEST_CASE("up a: minimized counterexample") {
  auto f = parse("up a");
  auto c = falsify(f);
  REQUIRE(c);
  auto m = minimize(*c, f);
  CHECK(m.trace.stem() == std::vector<State>{st({false})});
  CHECK(m.trace.loop() == std::vector<State>{st({true})});
  CHECK(m.stutter_index == 0);
  CHECK(m.value_before);
  CHECK_FALSE(m.value_after);
  CHECK(is_valid_counterexample(m, f));
}

TEST_CASE("next-free formula has no counterexample") {
  CHECK_FALSE(falsify(parse("G(a -> F b)")).has_value());
  CHECK_FALSE(falsify(parse("true")).has_value());
}

TEST_CASE("atom cap and bounds are enforced") {
  CHECK_THROWS_AS(falsify(parse("a & b & c & d")), AtomCapError);
  CHECK_NOTHROW(falsify(parse("a & b & c & d"), {.max_stem = 1, .atom_cap = 4}));
  CHECK_THROWS_AS(falsify(parse("X a"), {.max_loop = 0}), std::invalid_argument);
}

TEST_CASE("formulas without atoms search one synthetic atom") {
  CHECK(search_atoms(parse("X true")).size() == 1);
  CHECK_FALSE(falsify(parse("X true")).has_value());
}

TEST_CASE("search follows the documented order") {
  testing::FormulaGen gen(31, {.max_depth = 3});
  SearchBounds b{.max_stem = 2, .max_loop = 2, .max_unroll = 1};
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    auto f = gen();
    CAPTURE(render(f));
    auto fast = falsify(f, b);
    auto slow = brute_force(f, b);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      ++found;
      CHECK(*fast == *slow);
      CHECK(is_valid_counterexample(*fast, f));
    }
  }
  CHECK(found > 30);
}

TEST_CASE("parallel search returns the sequential result") {
  testing::FormulaGen gen(32, {.max_depth = 4});
  for (int i = 0; i < 60; ++i) {
    auto f = gen();
    CAPTURE(render(f));
    CHECK(falsify(f, {}, 1) == falsify(f, {}, 3));
  }
}

TEST_CASE("enlarging bounds keeps counterexamples") {
  testing::FormulaGen gen(33, {.max_depth = 4});
  SearchBounds small{.max_stem = 1, .max_loop = 1, .max_unroll = 1};
  for (int i = 0; i < 200; ++i) {
    auto f = gen();
    if (!falsify(f, small)) continue;
    CAPTURE(render(f));
    CHECK(falsify(f).has_value());
  }
}

TEST_CASE("minimize returns valid, idempotent, no larger counterexamples") {
  testing::FormulaGen gen(34, {.max_depth = 4});
  for (int i = 0; i < 200; ++i) {
    auto f = gen();
    auto c = falsify(f);
    if (!c) continue;
    CAPTURE(render(f));
    REQUIRE(is_valid_counterexample(*c, f));
    auto m = minimize(*c, f);
    CHECK(is_valid_counterexample(m, f));
    CHECK(m.trace.stem_length() <= c->trace.stem_length());
    CHECK(minimize(m, f) == m);
  }
}
