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


#include "edgeltl/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include <json.hpp>

#include "edgeltl/rewrite.hpp"
#include "edgeltl/syntax.hpp"

namespace edgeltl {

namespace {

struct Row {
  Scope scope;
  int combination;
  const char* body;
  const char* notes;
};

// Bodies in the parser's grammar; P, Q, R are written p, q, r.
constexpr std::array<Row, 20> kExistence = {{
    {Scope::Global, 0, "F p", ""},
    {Scope::Global, 1, "F p", ""},
    {Scope::Global, 2, "F up p", ""},
    {Scope::Global, 3, "F up p", ""},
    {Scope::Before, 0, "F r -> !(!p U r)", ""},
    {Scope::Before, 1, "F up r -> (!up r U p)", ""},
    {Scope::Before, 2, "F r -> !(!up p U r)", ""},
    {Scope::Before, 3, "F up r -> !(!up p U up r)", ""},
    {Scope::After, 0, "F q -> F(q & F p)", ""},
    {Scope::After, 1, "F up q -> F(up q & X F p)", ""},
    {Scope::After, 2, "F q -> F(q & F up p)", ""},
    {Scope::After, 3, "F up q -> F(up q & F up p)", ""},
    {Scope::Between, 0, "G(q & F r -> !(!p U r) & !r)", ""},
    {Scope::Between, 1, "G(up q & F up r -> X(!up r U p) & !up r)",
     "the until is under X, unlike combination 0"},
    {Scope::Between, 2, "G(q & F r -> !(!up p U r) & !r)", ""},
    {Scope::Between, 3, "G(up q & F up r -> !(!up p U up r) & !up r)", ""},
    {Scope::AfterUntil, 0, "G(q -> (F r & (!(!p U r) & !r)) | (!F r & F p))", ""},
    {Scope::AfterUntil, 1, "G(up q -> X(!up r U p) & !up r)",
     "no if-then-else guard on F up r, unlike its siblings"},
    {Scope::AfterUntil, 2, "G(q -> (F r & (!(!up p U r) & !r)) | (!F r & F up p))",
     "closing parenthesis placed as in combinations 0 and 3"},
    {Scope::AfterUntil, 3,
     "G(up q -> (F up r & (!(!up p U up r) & !up r)) | (!F up r & F up p))", ""},
}};

bool is_metavariable_name(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isupper(u) && !std::isdigit(u) && c != '_') return false;
  }
  return is_valid_atom_name(metavariable_atom(s));
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

char scope_letter(Scope s) noexcept { return static_cast<char>('A' + static_cast<int>(s)); }

std::optional<Scope> scope_from_letter(char c) noexcept {
  c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (c < 'A' || c > 'E') return std::nullopt;
  return static_cast<Scope>(c - 'A');
}

std::string metavariable_atom(std::string_view metavariable) {
  std::string out(metavariable);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<PatternTemplate> builtin_catalog() {
  std::vector<PatternTemplate> out;
  for (const auto& row : kExistence) {
    PatternTemplate t;
    t.pattern = "existence";
    t.scope = row.scope;
    t.combination = row.combination;
    t.id = "existence/" + std::string(1, scope_letter(row.scope)) + "/" +
           std::to_string(row.combination);
    t.body = parse(row.body);
    for (const char* mv : {"P", "S", "Q", "R"}) {
      if (atoms_of(t.body).contains(metavariable_atom(mv))) t.metavariables.push_back(mv);
    }
    t.notes = row.notes;
    out.push_back(std::move(t));
  }
  return out;
}

Catalog::Catalog() : templates_(builtin_catalog()) {}

const PatternTemplate& Catalog::find(std::string_view id) const {
  for (const auto& t : templates_) {
    if (t.id == id) return t;
  }
  throw CatalogError("unknown template '" + std::string(id) + "'");
}

const Verdict* Catalog::recorded_verdict(std::string_view id) const {
  auto it = verdicts_.find(id);
  return it == verdicts_.end() ? nullptr : &it->second;
}

std::vector<std::string> Catalog::load_user_templates(std::string_view document) {
  using json = nlohmann::json;
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw CatalogError(std::string("malformed catalog document: ") + e.what());
  }
  if (!doc.is_array()) throw CatalogError("catalog document must be a list of entries");

  std::vector<PatternTemplate> added;
  for (const auto& entry : doc) {
    if (!entry.is_object()) throw CatalogError("catalog entry must be an object");
    auto text = [&](const char* key, bool required) -> std::string {
      auto it = entry.find(key);
      if (it == entry.end()) {
        if (required) throw CatalogError(std::string("catalog entry lacks '") + key + "'");
        return {};
      }
      if (!it->is_string()) throw CatalogError(std::string("'") + key + "' must be a string");
      return it->get<std::string>();
    };
    PatternTemplate t;
    const auto name = text("id", true);
    if (name.empty()) throw CatalogError("template id must not be empty");
    t.id = "user/" + name;
    t.pattern = "user";
    t.notes = text("notes", false);

    auto mvs = entry.find("metavariables");
    if (mvs == entry.end() || !mvs->is_array()) {
      throw CatalogError(t.id + ": 'metavariables' must be a list");
    }
    for (const auto& mv : *mvs) {
      if (!mv.is_string() || !is_metavariable_name(mv.get<std::string>())) {
        throw CatalogError(t.id + ": invalid metavariable " + mv.dump());
      }
      auto s = mv.get<std::string>();
      if (std::find(t.metavariables.begin(), t.metavariables.end(), s) !=
          t.metavariables.end()) {
        throw CatalogError(t.id + ": duplicate metavariable " + s);
      }
      t.metavariables.push_back(s);
    }
    t.body = parse(text("body", true));  // ParseError carries the span
    for (const auto& a : atoms_of(t.body)) {
      bool known = std::any_of(t.metavariables.begin(), t.metavariables.end(),
                               [&](const auto& mv) { return metavariable_atom(mv) == a; });
      if (!known) {
        throw CatalogError(t.id + ": body atom '" + a + "' is not a declared metavariable");
      }
    }

    auto clash = [&](const PatternTemplate& o) { return o.id == t.id; };
    if (std::any_of(templates_.begin(), templates_.end(), clash) ||
        std::any_of(added.begin(), added.end(), clash)) {
      throw CatalogError("duplicate template id '" + t.id + "'");
    }
    added.push_back(std::move(t));
  }

  std::vector<std::string> ids;
  for (auto& t : added) {
    ids.push_back(t.id);
    verdicts_.emplace(t.id, analyze(t.body));
    templates_.push_back(std::move(t));
  }
  return ids;
}

Instantiation instantiate(const PatternTemplate& t, const Binding& binding) {
  std::vector<std::string> missing, extra;
  for (const auto& mv : t.metavariables) {
    if (!binding.contains(mv)) missing.push_back(mv);
  }
  for (const auto& [key, value] : binding) {
    if (std::find(t.metavariables.begin(), t.metavariables.end(), key) ==
        t.metavariables.end()) {
      extra.push_back(key);
    }
  }
  if (!missing.empty() || !extra.empty()) {
    std::string msg = t.id + " takes " + join(t.metavariables);
    if (!missing.empty()) msg += "; missing " + join(missing);
    if (!extra.empty()) msg += "; unexpected " + join(extra);
    throw CatalogError(msg);
  }

  Instantiation out;
  std::vector<std::pair<std::string, Formula>> subst;
  for (const auto& mv : t.metavariables) {
    const Formula& value = binding.find(mv)->second;
    subst.emplace_back(metavariable_atom(mv), value);
    if (!analyze(value).is_closed()) {
      out.warnings.push_back(mv + " = " + render(value) +
                             " is not provably closed under stuttering; the result may "
                             "not be either");
    }
  }
  out.formula = normalize_edge_duals(substitute(t.body, subst));
  return out;
}

bool CatalogReport::all_closed() const noexcept {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.verdict.is_closed(); });
}

CatalogReport check_catalog(const std::vector<PatternTemplate>& templates) {
  CatalogReport report;
  for (const auto& t : templates) report.entries.push_back({t.id, analyze(t.body)});
  return report;
}

CatalogReport check_catalog() { return check_catalog(builtin_catalog()); }

}  // namespace edgeltl
