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

#include <algorithm>
#include <fstream>
#include <map>

#include "edgeltl/falsifier.hpp"
#include "edgeltl/patterns.hpp"
#include "edgeltl/proof_check.hpp"
#include "edgeltl/syntax.hpp"

using namespace edgeltl;

namespace {

std::map<std::string, std::string> golden() {
  std::ifstream in(EDGELTL_TEST_DATA "/golden/existence.txt");
  REQUIRE(in);
  std::map<std::string, std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    auto sp = line.find(' ');
    out[line.substr(0, sp)] = line.substr(sp + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("built-in catalog has the 20 Existence templates") {
  auto cat = builtin_catalog();
  REQUIRE(cat.size() == 20);
  for (const auto& t : cat) {
    CHECK(t.pattern == "existence");
    REQUIRE(t.scope);
    REQUIRE(t.combination);
    CHECK(t.id == "existence/" + std::string(1, scope_letter(*t.scope)) + "/" +
                      std::to_string(*t.combination));
    for (const auto& a : atoms_of(t.body)) {
      bool declared = std::any_of(t.metavariables.begin(), t.metavariables.end(),
                                  [&](const auto& mv) { return metavariable_atom(mv) == a; });
      CHECK(declared);
    }
  }
}

TEST_CASE("catalog bodies match the golden file") {
  auto expected = golden();
  auto cat = builtin_catalog();
  REQUIRE(expected.size() == cat.size());
  for (const auto& t : cat) {
    CAPTURE(t.id);
    CHECK(render(t.body) == expected.at(t.id));
    CHECK(parse(expected.at(t.id)) == t.body);
  }
}

TEST_CASE("catalog lookups") {
  Catalog c;
  CHECK(c.find("existence/A/2").body == parse("F up p"));
  CHECK(c.find("existence/D/1").body == parse("G(up q & F up r -> X(!up r U p) & !up r)"));
  CHECK(c.find("existence/B/0").body == parse("F r -> !(!p U r)"));
  CHECK(c.find("existence/B/0").metavariables == std::vector<std::string>{"P", "R"});
  CHECK(c.find("existence/D/1").metavariables == std::vector<std::string>{"P", "Q", "R"});
  CHECK_THROWS_AS(c.find("existence/F/0"), CatalogError);
  CHECK(scope_from_letter('d') == Scope::Between);
  CHECK_FALSE(scope_from_letter('Z').has_value());
}

TEST_CASE("instantiate") {
  Catalog c;
  SUBCASE("robot weighs the blank") {
    auto r = instantiate(c.find("existence/D/1"),
                         {{"P", parse("scl")}, {"Q", parse("mgn")}, {"R", parse("!mgn")}});
    CHECK(r.formula == parse("G(up mgn & F down mgn -> X(!down mgn U scl) & !down mgn)"));
    CHECK(r.warnings.empty());
  }
  SUBCASE("direct substitution") {
    auto r = instantiate(c.find("existence/A/0"), {{"P", parse("p")}});
    CHECK(r.formula == parse("F p"));
  }
  SUBCASE("non-closed binding warns") {
    auto r = instantiate(c.find("existence/B/1"), {{"P", parse("p")}, {"R", parse("X r")}});
    CHECK(r.formula == parse("F up X r -> (!up X r U p)"));
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("X r") != std::string::npos);
  }
  SUBCASE("binding arity") {
    CHECK_THROWS_AS(instantiate(c.find("existence/A/0"), {}), CatalogError);
    CHECK_THROWS_AS(
        instantiate(c.find("existence/A/0"), {{"P", parse("p")}, {"Q", parse("q")}}),
        CatalogError);
  }
}

TEST_CASE("every template is closed and the proofs check") {
  auto report = check_catalog();
  REQUIRE(report.entries.size() == 20);
  CHECK(report.all_closed());
  for (const auto& e : report.entries) {
    CAPTURE(e.id);
    REQUIRE(e.verdict.is_closed());
    CHECK_FALSE(check_proof(e.verdict.proof()));
  }
}

TEST_CASE("templates stay closed under fresh-atom bindings") {
  for (const auto& t : builtin_catalog()) {
    Binding b;
    for (const auto& mv : t.metavariables) b[mv] = atom("fresh_" + metavariable_atom(mv));
    auto r = instantiate(t, b);
    CAPTURE(t.id);
    CHECK(analyze(r.formula).is_closed());
    CHECK(r.warnings.empty());
  }
}

TEST_CASE("substitution commutes with rendering for atom bindings") {
  for (const auto& t : builtin_catalog()) {
    Binding b;
    std::string text = render(t.body);
    std::string renamed;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      bool alone = (i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]))) &&
                   (i + 1 == text.size() ||
                    !std::isalnum(static_cast<unsigned char>(text[i + 1])));
      if (alone && (ch == 'p' || ch == 'q' || ch == 'r')) {
        renamed += std::string("v") + ch;
      } else {
        renamed += ch;
      }
    }
    for (const auto& mv : t.metavariables) b[mv] = atom("v" + metavariable_atom(mv));
    CAPTURE(t.id);
    CHECK(render(instantiate(t, b).formula) == renamed);
  }
}

TEST_CASE("falsifier spot-checks three templates at default bounds") {
  Catalog c;
  for (const char* id : {"existence/B/1", "existence/C/3", "existence/D/1"}) {
    CAPTURE(id);
    CHECK_FALSE(falsify(c.find(id).body).has_value());
  }
}

TEST_CASE("user templates") {
  Catalog c;
  SUBCASE("universality and a non-provable body") {
    auto ids = c.load_user_templates(R"js([
      {"id": "universality/edge", "metavariables": ["A", "B"], "body": "G(up a -> b)",
       "notes": "simplified always form"},
      {"id": "next", "metavariables": ["P"], "body": "X p", "notes": ""}
    ])js");
    CHECK(ids == std::vector<std::string>{"user/universality/edge", "user/next"});
    CHECK(c.templates().size() == 22);
    REQUIRE(c.recorded_verdict("user/universality/edge"));
    CHECK(c.recorded_verdict("user/universality/edge")->is_closed());
    CHECK_FALSE(c.recorded_verdict("user/next")->is_closed());
    CHECK(c.recorded_verdict("existence/A/0") == nullptr);
    CHECK(c.find("user/next").notes.empty());
    CHECK_FALSE(check_catalog(c.templates()).all_closed());
  }
  SUBCASE("duplicate id") {
    c.load_user_templates(R"([{"id": "x", "metavariables": ["P"], "body": "p"}])");
    CHECK_THROWS_AS(
        c.load_user_templates(R"([{"id": "x", "metavariables": ["P"], "body": "p"}])"),
        CatalogError);
    CHECK_THROWS_AS(c.load_user_templates(R"([{"id": "y", "metavariables": ["P"], "body": "p"},
                                              {"id": "y", "metavariables": ["P"], "body": "p"}])"),
                    CatalogError);
    CHECK(c.templates().size() == 21);
  }
  SUBCASE("body errors") {
    CHECK_THROWS_AS(
        c.load_user_templates(R"([{"id": "x", "metavariables": ["P"], "body": "p &"}])"),
        ParseError);
    CHECK_THROWS_AS(
        c.load_user_templates(R"([{"id": "x", "metavariables": ["P"], "body": "p & q"}])"),
        CatalogError);
    CHECK_THROWS_AS(c.load_user_templates(R"([{"id": "x", "metavariables": ["up"], "body": "p"}])"),
                    CatalogError);
    CHECK_THROWS_AS(c.load_user_templates("{}"), CatalogError);
    CHECK(c.templates().size() == 20);
  }
}
