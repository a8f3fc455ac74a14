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


// Property-pattern catalog with edge-based variants.
//
// Built-in templates cover the Existence pattern over five scopes
// (A Global, B Before R, C After Q, D Between Q and R, E After Q Until R;
// all intervals closed on the left and open on the right) and four
// combinations of state- and edge-based conditions:
//   0  conditions are states, scope bounds are states
//   1  conditions are states, scope bounds are up edges
//   2  conditions are up edges, scope bounds are states
//   3  conditions and scope bounds are up edges
// Template bodies use the lower-case atom of each metavariable (P is
// written p).  if c then t else e is expanded as (c & t) | (!c & e).

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgeltl/analyzer.hpp"
#include "edgeltl/formula.hpp"

namespace edgeltl {

enum class Scope { Global, Before, After, Between, AfterUntil };

char scope_letter(Scope s) noexcept;
std::optional<Scope> scope_from_letter(char c) noexcept;

struct PatternTemplate {
  std::string id;       // "existence/D/1", or "user/<name>"
  std::string pattern;  // "existence" for built-ins, "user" otherwise
  std::optional<Scope> scope;
  std::optional<int> combination;
  std::vector<std::string> metavariables;  // upper-case names
  Formula body;
  std::string notes;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The 20 built-in Existence templates, ordered by scope then combination.
std::vector<PatternTemplate> builtin_catalog();

// Atom standing for a metavariable in template bodies.
std::string metavariable_atom(std::string_view metavariable);

class Catalog {
 public:
  Catalog();  // built-in templates

  const std::vector<PatternTemplate>& templates() const noexcept { return templates_; }

  // Throws CatalogError for an unknown id.
  const PatternTemplate& find(std::string_view id) const;

  // Reads a JSON list of {"id", "metavariables", "body", "notes"} entries
  // and adds them under "user/<id>".  Each body is analyzed on load.  All
  // or nothing: on error (malformed entry, ParseError in a body, duplicate
  // id) the catalog is unchanged.  Returns the new ids.
  std::vector<std::string> load_user_templates(std::string_view document);

  // Verdict recorded when a user template was loaded; nullptr otherwise.
  const Verdict* recorded_verdict(std::string_view id) const;

 private:
  std::vector<PatternTemplate> templates_;
  std::map<std::string, Verdict, std::less<>> verdicts_;
};

using Binding = std::map<std::string, Formula, std::less<>>;

struct Instantiation {
  Formula formula;
  std::vector<std::string> warnings;
};

// Substitutes the bound formulas for the metavariable atoms, then rewrites
// up !x as down x (and the other dualities).  Throws CatalogError when the
// binding keys differ from the template's metavariables.  Warns for every
// bound formula the analyzer cannot prove closed under stuttering.
Instantiation instantiate(const PatternTemplate& t, const Binding& binding);

struct CatalogReport {
  struct Entry {
    std::string id;
    Verdict verdict;
  };
  std::vector<Entry> entries;

  bool all_closed() const noexcept;
};

// Analyzes every template body with its metavariables as atoms.
CatalogReport check_catalog(const std::vector<PatternTemplate>& templates);
CatalogReport check_catalog();

}  // namespace edgeltl
