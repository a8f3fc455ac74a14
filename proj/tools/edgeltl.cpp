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


// edgeltl command-line front end.  Exit status: 0 success, 1 negative
// result (Unknown verdict, false, counterexample found, catalog not all
// Closed), 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "edgeltl/edgeltl.h"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct StringDeleter {
  void operator()(char* s) const { edgeltl_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct FormulaDeleter {
  void operator()(edgeltl_formula* f) const { edgeltl_formula_free(f); }
};
using FormulaPtr = std::unique_ptr<edgeltl_formula, FormulaDeleter>;

struct VerdictDeleter {
  void operator()(edgeltl_verdict* v) const { edgeltl_verdict_free(v); }
};
struct TraceDeleter {
  void operator()(edgeltl_trace* t) const { edgeltl_trace_free(t); }
};
struct CounterexampleDeleter {
  void operator()(edgeltl_counterexample* c) const { edgeltl_counterexample_free(c); }
};
struct CatalogDeleter {
  void operator()(edgeltl_catalog* c) const { edgeltl_catalog_free(c); }
};
using CatalogPtr = std::unique_ptr<edgeltl_catalog, CatalogDeleter>;

// Thrown to leave a command with exit status 2 after reporting.
struct Failure {};

void check(edgeltl_status s) {
  if (s != EDGELTL_OK) {
    std::cerr << "error: " << edgeltl_last_error() << "\n";
    throw Failure{};
  }
}

std::string take(char* s) {
  OwnedString owned(s);
  return s ? std::string(s) : std::string();
}

FormulaPtr parse_formula(const std::string& text) {
  edgeltl_formula* f = nullptr;
  size_t start = 0, end = 0;
  auto s = edgeltl_formula_parse(text.c_str(), &f, &start, &end);
  if (s == EDGELTL_E_PARSE) {
    std::cerr << "error: " << edgeltl_last_error() << "\n"
              << "  " << text << "\n"
              << "  " << std::string(start, ' ')
              << std::string(end > start ? end - start : 1, '^') << "\n";
    throw Failure{};
  }
  check(s);
  return FormulaPtr(f);
}

std::string render(const edgeltl_formula* f) {
  char* out = nullptr;
  check(edgeltl_formula_render(f, &out));
  return take(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_analyze(const std::string& text, const std::string& proof) {
  auto f = parse_formula(text);
  edgeltl_verdict* raw = nullptr;
  check(edgeltl_analyze(f.get(), &raw));
  std::unique_ptr<edgeltl_verdict, VerdictDeleter> v(raw);
  if (edgeltl_verdict_is_closed(v.get())) {
    std::cout << "Closed\n";
    if (!proof.empty()) {
      char* out = nullptr;
      check(edgeltl_verdict_proof(
          v.get(), proof == "json" ? EDGELTL_PROOF_JSON : EDGELTL_PROOF_TEXT, &out));
      std::cout << take(out) << (proof == "json" ? "\n" : "");
    }
    return kOk;
  }
  std::cout << "Unknown\n";
  for (size_t i = 0; i < edgeltl_verdict_blocker_count(v.get()); ++i) {
    char* out = nullptr;
    check(edgeltl_verdict_blocker(v.get(), i, &out));
    std::cout << "blocker: " << take(out) << "\n";
  }
  return kNegative;
}

int cmd_eval(const std::string& text, const std::string& trace_path, size_t position) {
  auto f = parse_formula(text);
  auto doc = read_file(trace_path);
  edgeltl_trace* raw = nullptr;
  check(edgeltl_trace_from_json(doc.c_str(), &raw));
  std::unique_ptr<edgeltl_trace, TraceDeleter> t(raw);
  int value = 0;
  check(edgeltl_eval(f.get(), t.get(), position, &value));
  std::cout << (value ? "true" : "false") << "\n";
  return value ? kOk : kNegative;
}

int cmd_falsify(const std::string& text, const edgeltl_bounds& b, unsigned jobs,
                bool minimize) {
  auto f = parse_formula(text);
  edgeltl_counterexample* raw = nullptr;
  check(edgeltl_falsify(f.get(), &b, jobs, minimize ? 1 : 0, &raw));
  std::unique_ptr<edgeltl_counterexample, CounterexampleDeleter> c(raw);
  if (!c) {
    std::cout << "no counterexample within bounds\n";
    return kOk;
  }
  char* out = nullptr;
  check(edgeltl_counterexample_to_json(c.get(), &out));
  std::cout << take(out) << "\n";
  return kNegative;
}

CatalogPtr open_catalog(const std::string& user_file) {
  edgeltl_catalog* raw = nullptr;
  check(edgeltl_catalog_new(&raw));
  CatalogPtr c(raw);
  if (!user_file.empty()) {
    auto doc = read_file(user_file);
    size_t start = 0, end = 0;
    auto s = edgeltl_catalog_load_user(c.get(), doc.c_str(), &start, &end);
    if (s == EDGELTL_E_PARSE) {
      std::cerr << "error: " << user_file << ": template body, characters " << start << ".."
                << end << ": " << edgeltl_last_error() << "\n";
      throw Failure{};
    }
    check(s);
  }
  return c;
}

// "existence D 1", "existence/D/1", "user name" or "user/name".
std::string template_id(const std::vector<std::string>& ref) {
  std::string id;
  for (const auto& part : ref) id += (id.empty() ? "" : "/") + part;
  return id;
}

int cmd_pattern_list(const std::string& user_file) {
  auto c = open_catalog(user_file);
  for (size_t i = 0; i < edgeltl_catalog_size(c.get()); ++i) {
    char* out = nullptr;
    check(edgeltl_catalog_id(c.get(), i, &out));
    std::cout << take(out) << "\n";
  }
  return kOk;
}

int cmd_pattern_show(const std::string& user_file, const std::vector<std::string>& ref) {
  auto c = open_catalog(user_file);
  const auto id = template_id(ref);
  char* body = nullptr;
  check(edgeltl_catalog_body(c.get(), id.c_str(), &body));
  std::cout << take(body) << "\n";
  char* notes = nullptr;
  check(edgeltl_catalog_notes(c.get(), id.c_str(), &notes));
  if (auto n = take(notes); !n.empty()) std::cerr << "note: " << n << "\n";
  return kOk;
}

int cmd_pattern_instantiate(const std::string& user_file, const std::vector<std::string>& ref,
                            const std::vector<std::string>& bindings) {
  auto c = open_catalog(user_file);
  const auto id = template_id(ref);
  std::vector<std::string> keys;
  std::vector<FormulaPtr> values;
  for (const auto& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: binding '" << b << "' is not of the form NAME=FORMULA\n";
      throw Failure{};
    }
    keys.push_back(b.substr(0, eq));
    values.push_back(parse_formula(b.substr(eq + 1)));
  }
  std::vector<const char*> key_ptrs;
  std::vector<const edgeltl_formula*> value_ptrs;
  for (size_t i = 0; i < keys.size(); ++i) {
    key_ptrs.push_back(keys[i].c_str());
    value_ptrs.push_back(values[i].get());
  }
  edgeltl_formula* raw = nullptr;
  char* warnings = nullptr;
  check(edgeltl_catalog_instantiate(c.get(), id.c_str(), key_ptrs.data(), value_ptrs.data(),
                                    keys.size(), &raw, &warnings));
  FormulaPtr f(raw);
  std::cout << render(f.get()) << "\n";
  std::istringstream lines(take(warnings));
  for (std::string line; std::getline(lines, line);) std::cerr << "warning: " << line << "\n";
  return kOk;
}

int cmd_pattern_check(const std::string& user_file) {
  auto c = open_catalog(user_file);
  char* out = nullptr;
  int all_closed = 0;
  check(edgeltl_catalog_check(c.get(), &out, &all_closed));
  std::cout << take(out);
  return all_closed ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTL with edge operators: evaluation, closure under stuttering, patterns",
               "edgeltl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(edgeltl_version()));

  std::string formula;
  int status = kOk;

  auto* analyze = app.add_subcommand("analyze", "Prove closure under stuttering");
  std::string proof;
  analyze->add_option("formula", formula, "Formula text")->required();
  analyze->add_option("--proof", proof, "Print the derivation")
      ->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a lasso trace");
  std::string trace_path;
  size_t position = 0;
  eval->add_option("formula", formula, "Formula text")->required();
  eval->add_option("trace", trace_path, "Trace document (JSON)")->required();
  eval->add_option("--position", position, "Position to evaluate at");

  auto* falsify = app.add_subcommand("falsify", "Search for a stuttering counterexample");
  edgeltl_bounds bounds = edgeltl_default_bounds();
  unsigned jobs = 1;
  bool no_minimize = false;
  falsify->add_option("formula", formula, "Formula text")->required();
  falsify->add_option("--stem-max", bounds.max_stem, "Longest stem")->capture_default_str();
  falsify->add_option("--loop-max", bounds.max_loop, "Longest loop")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  falsify->add_option("--unroll-max", bounds.max_unroll, "Most loop unrollings")
      ->capture_default_str();
  falsify->add_option("--atom-cap", bounds.atom_cap, "Most atoms searched")
      ->capture_default_str();
  falsify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  falsify->add_flag("--no-minimize", no_minimize, "Report the first counterexample as found");

  auto* pattern = app.add_subcommand("pattern", "Property-pattern catalog");
  pattern->require_subcommand(1);
  std::string catalog_file;
  pattern->add_option("--catalog", catalog_file, "Extra user templates (JSON)");
  std::vector<std::string> ref;
  std::vector<std::string> bindings;
  auto* list = pattern->add_subcommand("list", "List template ids");
  auto* show = pattern->add_subcommand("show", "Print a template body");
  show->add_option("template", ref, "Id, or pattern scope combination")->required();
  auto* inst = pattern->add_subcommand("instantiate", "Bind metavariables");
  inst->add_option("template", ref, "Id, or pattern scope combination")->required();
  inst->add_option("-b,--bind", bindings, "NAME=FORMULA");
  auto* check_cmd = pattern->add_subcommand("check", "Analyze every template");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*analyze) status = cmd_analyze(formula, proof);
    else if (*eval) status = cmd_eval(formula, trace_path, position);
    else if (*falsify) status = cmd_falsify(formula, bounds, jobs, !no_minimize);
    else if (*list) status = cmd_pattern_list(catalog_file);
    else if (*show) status = cmd_pattern_show(catalog_file, ref);
    else if (*inst) status = cmd_pattern_instantiate(catalog_file, ref, bindings);
    else if (*check_cmd) status = cmd_pattern_check(catalog_file);
  } catch (const Failure&) {
    return kError;
  }
  return status;
}
