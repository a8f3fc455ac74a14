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


#include "edgeltl/edgeltl.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "edgeltl/analyzer.hpp"
#include "edgeltl/documents.hpp"
#include "edgeltl/falsifier.hpp"
#include "edgeltl/patterns.hpp"
#include "edgeltl/proof_check.hpp"
#include "edgeltl/semantics.hpp"
#include "edgeltl/syntax.hpp"

struct edgeltl_formula {
  edgeltl::Formula value;
};
struct edgeltl_verdict {
  edgeltl::Verdict value;
};
struct edgeltl_trace {
  edgeltl::LassoTrace value;
};
struct edgeltl_counterexample {
  edgeltl::Formula formula;
  edgeltl::Counterexample value;
};
struct edgeltl_catalog {
  edgeltl::Catalog value;
};

namespace {

thread_local std::string last_error;
thread_local std::optional<edgeltl::SourceSpan> last_span;

edgeltl_status fail(edgeltl_status s, const std::string& message) {
  last_error = message;
  return s;
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Fn>
edgeltl_status guard(Fn&& fn) {
  last_span.reset();
  try {
    return fn();
  } catch (const edgeltl::ParseError& e) {
    last_span = e.span();
    return fail(EDGELTL_E_PARSE, e.what());
  } catch (const edgeltl::UnknownAtomError& e) {
    return fail(EDGELTL_E_UNKNOWN_ATOM, e.what());
  } catch (const edgeltl::AtomCapError& e) {
    return fail(EDGELTL_E_ATOM_CAP, e.what());
  } catch (const edgeltl::DocumentError& e) {
    return fail(EDGELTL_E_DOCUMENT, e.what());
  } catch (const edgeltl::CatalogError& e) {
    return fail(EDGELTL_E_CATALOG, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(EDGELTL_E_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(EDGELTL_E_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(EDGELTL_E_INTERNAL, e.what());
  } catch (...) {
    return fail(EDGELTL_E_INTERNAL, "unexpected exception");
  }
}

void store_span(size_t* start, size_t* end) {
  if (!last_span) return;
  if (start) *start = last_span->start;
  if (end) *end = last_span->end;
}

edgeltl_status null_argument(const char* what) {
  return fail(EDGELTL_E_ARGUMENT, std::string(what) + " must not be null");
}

}  // namespace

extern "C" {

const char* edgeltl_version(void) { return "1.0.0"; }

const char* edgeltl_status_name(edgeltl_status status) {
  switch (status) {
    case EDGELTL_OK: return "ok";
    case EDGELTL_E_ARGUMENT: return "invalid argument";
    case EDGELTL_E_PARSE: return "parse error";
    case EDGELTL_E_UNKNOWN_ATOM: return "unknown atom";
    case EDGELTL_E_DOCUMENT: return "document error";
    case EDGELTL_E_ATOM_CAP: return "atom cap exceeded";
    case EDGELTL_E_CATALOG: return "catalog error";
    case EDGELTL_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* edgeltl_last_error(void) { return last_error.c_str(); }

void edgeltl_string_free(char* s) { std::free(s); }

edgeltl_status edgeltl_formula_parse(const char* text, edgeltl_formula** out,
                                     size_t* span_start, size_t* span_end) {
  if (!text || !out) return null_argument("text and out");
  auto s = guard([&] {
    *out = new edgeltl_formula{edgeltl::parse(text)};
    return EDGELTL_OK;
  });
  store_span(span_start, span_end);
  return s;
}

edgeltl_status edgeltl_formula_render(const edgeltl_formula* f, char** out) {
  if (!f || !out) return null_argument("formula and out");
  return guard([&] {
    *out = dup(edgeltl::render(f->value));
    return EDGELTL_OK;
  });
}

void edgeltl_formula_free(edgeltl_formula* f) { delete f; }

edgeltl_status edgeltl_analyze(const edgeltl_formula* f, edgeltl_verdict** out) {
  if (!f || !out) return null_argument("formula and out");
  return guard([&] {
    *out = new edgeltl_verdict{edgeltl::analyze(f->value)};
    return EDGELTL_OK;
  });
}

int edgeltl_verdict_is_closed(const edgeltl_verdict* v) {
  return v && v->value.is_closed() ? 1 : 0;
}

edgeltl_status edgeltl_verdict_proof(const edgeltl_verdict* v, edgeltl_proof_format format,
                                     char** out) {
  if (!v || !out) return null_argument("verdict and out");
  if (!v->value.is_closed()) return fail(EDGELTL_E_ARGUMENT, "verdict is Unknown");
  return guard([&] {
    auto f = format == EDGELTL_PROOF_JSON ? edgeltl::ProofFormat::Json
                                          : edgeltl::ProofFormat::Text;
    *out = dup(edgeltl::render_proof(v->value.proof(), f));
    return EDGELTL_OK;
  });
}

size_t edgeltl_verdict_blocker_count(const edgeltl_verdict* v) {
  return v ? v->value.blockers().size() : 0;
}

edgeltl_status edgeltl_verdict_blocker(const edgeltl_verdict* v, size_t index, char** out) {
  if (!v || !out) return null_argument("verdict and out");
  if (index >= v->value.blockers().size()) {
    return fail(EDGELTL_E_ARGUMENT, "blocker index out of range");
  }
  return guard([&] {
    *out = dup(edgeltl::render(v->value.blockers()[index]));
    return EDGELTL_OK;
  });
}

void edgeltl_verdict_free(edgeltl_verdict* v) { delete v; }

edgeltl_status edgeltl_proof_check_json(const char* document, int* valid, char** problem) {
  if (!document || !valid) return null_argument("document and valid");
  return guard([&] {
    auto issue = edgeltl::check_proof(edgeltl::proof_from_json(document));
    *valid = issue ? 0 : 1;
    if (problem) *problem = issue ? dup(*issue) : nullptr;
    return EDGELTL_OK;
  });
}

edgeltl_status edgeltl_trace_from_json(const char* document, edgeltl_trace** out) {
  if (!document || !out) return null_argument("document and out");
  return guard([&] {
    *out = new edgeltl_trace{edgeltl::trace_from_json(document)};
    return EDGELTL_OK;
  });
}

edgeltl_status edgeltl_trace_to_json(const edgeltl_trace* t, char** out) {
  if (!t || !out) return null_argument("trace and out");
  return guard([&] {
    *out = dup(edgeltl::trace_to_json(t->value));
    return EDGELTL_OK;
  });
}

void edgeltl_trace_free(edgeltl_trace* t) { delete t; }

edgeltl_status edgeltl_eval(const edgeltl_formula* f, const edgeltl_trace* t, size_t position,
                            int* out) {
  if (!f || !t || !out) return null_argument("formula, trace and out");
  return guard([&] {
    *out = edgeltl::eval(f->value, t->value, position) ? 1 : 0;
    return EDGELTL_OK;
  });
}

edgeltl_bounds edgeltl_default_bounds(void) {
  edgeltl::SearchBounds b;
  return {b.max_stem, b.max_loop, b.max_unroll, b.atom_cap};
}

edgeltl_status edgeltl_falsify(const edgeltl_formula* f, const edgeltl_bounds* b, unsigned jobs,
                               int minimize, edgeltl_counterexample** out) {
  if (!f || !out) return null_argument("formula and out");
  return guard([&] {
    edgeltl::SearchBounds bounds;
    if (b) bounds = {b->max_stem, b->max_loop, b->max_unroll, b->atom_cap};
    auto c = edgeltl::falsify(f->value, bounds, jobs == 0 ? 1 : jobs);
    if (!c) {
      *out = nullptr;
      return EDGELTL_OK;
    }
    if (minimize) c = edgeltl::minimize(*c, f->value);
    *out = new edgeltl_counterexample{f->value, std::move(*c)};
    return EDGELTL_OK;
  });
}

edgeltl_status edgeltl_counterexample_to_json(const edgeltl_counterexample* c, char** out) {
  if (!c || !out) return null_argument("counterexample and out");
  return guard([&] {
    *out = dup(edgeltl::counterexample_to_json(c->formula, c->value));
    return EDGELTL_OK;
  });
}

size_t edgeltl_counterexample_stem_length(const edgeltl_counterexample* c) {
  return c ? c->value.trace.stem_length() : 0;
}

size_t edgeltl_counterexample_loop_length(const edgeltl_counterexample* c) {
  return c ? c->value.trace.loop_length() : 0;
}

size_t edgeltl_counterexample_stutter_index(const edgeltl_counterexample* c) {
  return c ? c->value.stutter_index : 0;
}

void edgeltl_counterexample_free(edgeltl_counterexample* c) { delete c; }

edgeltl_status edgeltl_catalog_new(edgeltl_catalog** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    *out = new edgeltl_catalog{};
    return EDGELTL_OK;
  });
}

edgeltl_status edgeltl_catalog_load_user(edgeltl_catalog* c, const char* document,
                                         size_t* span_start, size_t* span_end) {
  if (!c || !document) return null_argument("catalog and document");
  auto s = guard([&] {
    c->value.load_user_templates(document);
    return EDGELTL_OK;
  });
  store_span(span_start, span_end);
  return s;
}

size_t edgeltl_catalog_size(const edgeltl_catalog* c) {
  return c ? c->value.templates().size() : 0;
}

edgeltl_status edgeltl_catalog_id(const edgeltl_catalog* c, size_t index, char** out) {
  if (!c || !out) return null_argument("catalog and out");
  if (index >= c->value.templates().size()) {
    return fail(EDGELTL_E_ARGUMENT, "template index out of range");
  }
  *out = dup(c->value.templates()[index].id);
  return EDGELTL_OK;
}

edgeltl_status edgeltl_catalog_body(const edgeltl_catalog* c, const char* id, char** out) {
  if (!c || !id || !out) return null_argument("catalog, id and out");
  return guard([&] {
    *out = dup(edgeltl::render(c->value.find(id).body));
    return EDGELTL_OK;
  });
}

edgeltl_status edgeltl_catalog_notes(const edgeltl_catalog* c, const char* id, char** out) {
  if (!c || !id || !out) return null_argument("catalog, id and out");
  return guard([&] {
    *out = dup(c->value.find(id).notes);
    return EDGELTL_OK;
  });
}

edgeltl_status edgeltl_catalog_instantiate(const edgeltl_catalog* c, const char* id,
                                           const char* const* keys,
                                           const edgeltl_formula* const* values, size_t count,
                                           edgeltl_formula** out, char** warnings) {
  if (!c || !id || !out || (count && (!keys || !values))) {
    return null_argument("catalog, id, out and bindings");
  }
  return guard([&] {
    edgeltl::Binding binding;
    for (size_t i = 0; i < count; ++i) {
      if (!keys[i] || !values[i]) return null_argument("binding entries");
      if (!binding.emplace(keys[i], values[i]->value).second) {
        return fail(EDGELTL_E_CATALOG, std::string("metavariable ") + keys[i] + " bound twice");
      }
    }
    auto inst = edgeltl::instantiate(c->value.find(id), binding);
    if (warnings) {
      std::string joined;
      for (const auto& w : inst.warnings) joined += w + "\n";
      *warnings = joined.empty() ? nullptr : dup(joined);
    }
    *out = new edgeltl_formula{inst.formula};
    return EDGELTL_OK;
  });
}

edgeltl_status edgeltl_catalog_check(const edgeltl_catalog* c, char** report, int* all_closed) {
  if (!c || !report || !all_closed) return null_argument("catalog, report and all_closed");
  return guard([&] {
    auto r = edgeltl::check_catalog(c->value.templates());
    std::string text;
    for (const auto& e : r.entries) {
      text += e.id + (e.verdict.is_closed() ? " Closed\n" : " Unknown\n");
    }
    *report = dup(text);
    *all_closed = r.all_closed() ? 1 : 0;
    return EDGELTL_OK;
  });
}

void edgeltl_catalog_free(edgeltl_catalog* c) { delete c; }

}  // extern "C"
