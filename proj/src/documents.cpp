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


#include "edgeltl/documents.hpp"

#include <json.hpp>

#include "edgeltl/syntax.hpp"

namespace edgeltl {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw DocumentError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw DocumentError(std::string("missing field '") + name + "'");
  return *it;
}

Formula formula_field(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_string()) throw DocumentError(std::string("field '") + name + "' must be a string");
  try {
    return parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw DocumentError(std::string("field '") + name + "': " + e.what());
  }
}

json trace_json(const LassoTrace& t) {
  auto rows = [](const std::vector<State>& states) {
    json out = json::array();
    for (const auto& s : states) {
      json row = json::array();
      for (bool v : s.values()) row.push_back(v);
      out.push_back(std::move(row));
    }
    return out;
  };
  return json{{"atoms", t.atoms().names()}, {"stem", rows(t.stem())}, {"loop", rows(t.loop())}};
}

LassoTrace trace_of(const json& j) {
  const auto& names = field(j, "atoms");
  if (!names.is_array()) throw DocumentError("field 'atoms' must be a list");
  AtomSet atoms;
  for (const auto& n : names) {
    if (!n.is_string() || !is_valid_atom_name(n.get<std::string>())) {
      throw DocumentError("invalid atom name in 'atoms': " + n.dump());
    }
    if (!atoms.add(n.get<std::string>())) {
      throw DocumentError("duplicate atom '" + n.get<std::string>() + "'");
    }
  }
  auto states = [&](const char* name) {
    const auto& rows = field(j, name);
    if (!rows.is_array()) throw DocumentError(std::string("field '") + name + "' must be a list");
    std::vector<State> out;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != atoms.size()) {
        throw DocumentError(std::string("every state in '") + name + "' must list " +
                            std::to_string(atoms.size()) + " booleans");
      }
      std::vector<bool> v;
      for (const auto& x : row) {
        if (!x.is_boolean()) throw DocumentError("state values must be booleans");
        v.push_back(x.get<bool>());
      }
      out.emplace_back(std::move(v));
    }
    return out;
  };
  auto stem = states("stem");
  auto loop = states("loop");
  if (loop.empty()) throw DocumentError("field 'loop' must not be empty");
  return LassoTrace(std::move(atoms), std::move(stem), std::move(loop));
}

ProofTree proof_of(const json& j) {
  const auto& rule = field(j, "rule");
  if (!rule.is_string()) throw DocumentError("field 'rule' must be a string");
  auto name = rule_from_string(rule.get<std::string>());
  if (!name) throw DocumentError("unknown rule '" + rule.get<std::string>() + "'");
  ProofTree p{*name, formula_field(j, "conclusion"), {}, {}};
  const auto& premises = field(j, "premises");
  if (!premises.is_array()) throw DocumentError("field 'premises' must be a list");
  for (const auto& q : premises) p.premises.push_back(proof_of(q));
  if (auto it = j.find("note"); it != j.end()) {
    if (!it->is_string()) throw DocumentError("field 'note' must be a string");
    p.note = it->get<std::string>();
  }
  return p;
}

}  // namespace

std::string trace_to_json(const LassoTrace& t) { return trace_json(t).dump(2); }

LassoTrace trace_from_json(std::string_view text) { return trace_of(parse_json(text)); }

std::string counterexample_to_json(const Formula& f, const Counterexample& c) {
  json j{{"formula", render(f)},
         {"trace", trace_json(c.trace)},
         {"stutter_index", c.stutter_index},
         {"value_before", c.value_before},
         {"value_after", c.value_after}};
  return j.dump(2);
}

CounterexampleDocument counterexample_from_json(std::string_view text) {
  auto j = parse_json(text);
  auto index = field(j, "stutter_index");
  auto before = field(j, "value_before");
  auto after = field(j, "value_after");
  if (!index.is_number_unsigned()) throw DocumentError("'stutter_index' must be a natural");
  if (!before.is_boolean() || !after.is_boolean()) {
    throw DocumentError("'value_before' and 'value_after' must be booleans");
  }
  return {formula_field(j, "formula"),
          Counterexample{trace_of(field(j, "trace")), index.get<std::size_t>(),
                         before.get<bool>(), after.get<bool>()}};
}

ProofTree proof_from_json(std::string_view text) { return proof_of(parse_json(text)); }

}  // namespace edgeltl
