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


/* C interface to edgeltl.
 *
 * Every object is an opaque handle released by its _free function.  Every
 * fallible call returns an edgeltl_status; on failure the message of the
 * most recent error on the calling thread is available from
 * edgeltl_last_error().  Strings returned through char** are owned by the
 * caller and released with edgeltl_string_free().
 */

#ifndef EDGELTL_H
#define EDGELTL_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(EDGELTL_BUILDING)
#define EDGELTL_API __declspec(dllexport)
#else
#define EDGELTL_API __declspec(dllimport)
#endif
#else
#define EDGELTL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edgeltl_status {
  EDGELTL_OK = 0,
  EDGELTL_E_ARGUMENT = 1,     /* null handle, bad bounds, bad index */
  EDGELTL_E_PARSE = 2,        /* formula text rejected; span available */
  EDGELTL_E_UNKNOWN_ATOM = 3, /* formula mentions an atom the trace lacks */
  EDGELTL_E_DOCUMENT = 4,     /* malformed JSON document */
  EDGELTL_E_ATOM_CAP = 5,     /* falsifier atom cap exceeded */
  EDGELTL_E_CATALOG = 6,      /* unknown template, bad binding, duplicate id */
  EDGELTL_E_INTERNAL = 7
} edgeltl_status;

typedef enum edgeltl_proof_format {
  EDGELTL_PROOF_TEXT = 0,
  EDGELTL_PROOF_JSON = 1
} edgeltl_proof_format;

typedef struct edgeltl_formula edgeltl_formula;
typedef struct edgeltl_verdict edgeltl_verdict;
typedef struct edgeltl_trace edgeltl_trace;
typedef struct edgeltl_counterexample edgeltl_counterexample;
typedef struct edgeltl_catalog edgeltl_catalog;

typedef struct edgeltl_bounds {
  size_t max_stem;
  size_t max_loop;
  size_t max_unroll;
  size_t atom_cap;
} edgeltl_bounds;

EDGELTL_API const char* edgeltl_version(void);
EDGELTL_API const char* edgeltl_status_name(edgeltl_status status);
EDGELTL_API const char* edgeltl_last_error(void);
EDGELTL_API void edgeltl_string_free(char* s);

/* Formulas.  On EDGELTL_E_PARSE the offending span is stored through
 * span_start / span_end when they are not null. */
EDGELTL_API edgeltl_status edgeltl_formula_parse(const char* text, edgeltl_formula** out,
                                                 size_t* span_start, size_t* span_end);
EDGELTL_API edgeltl_status edgeltl_formula_render(const edgeltl_formula* f, char** out);
EDGELTL_API void edgeltl_formula_free(edgeltl_formula* f);

/* Closure-under-stuttering analysis. */
EDGELTL_API edgeltl_status edgeltl_analyze(const edgeltl_formula* f, edgeltl_verdict** out);
EDGELTL_API int edgeltl_verdict_is_closed(const edgeltl_verdict* v);
EDGELTL_API edgeltl_status edgeltl_verdict_proof(const edgeltl_verdict* v,
                                                 edgeltl_proof_format format, char** out);
EDGELTL_API size_t edgeltl_verdict_blocker_count(const edgeltl_verdict* v);
EDGELTL_API edgeltl_status edgeltl_verdict_blocker(const edgeltl_verdict* v, size_t index,
                                                   char** out);
EDGELTL_API void edgeltl_verdict_free(edgeltl_verdict* v);

/* Re-validates a JSON proof document.  *valid is 1 when every node is a
 * correct rule application; otherwise 0 and *problem (if not null)
 * receives a description. */
EDGELTL_API edgeltl_status edgeltl_proof_check_json(const char* document, int* valid,
                                                    char** problem);

/* Traces and evaluation. */
EDGELTL_API edgeltl_status edgeltl_trace_from_json(const char* document, edgeltl_trace** out);
EDGELTL_API edgeltl_status edgeltl_trace_to_json(const edgeltl_trace* t, char** out);
EDGELTL_API void edgeltl_trace_free(edgeltl_trace* t);
EDGELTL_API edgeltl_status edgeltl_eval(const edgeltl_formula* f, const edgeltl_trace* t,
                                        size_t position, int* out);

/* Counterexample search.  *out is set to null when the search finds
 * nothing.  jobs = 0 is treated as 1. */
EDGELTL_API edgeltl_bounds edgeltl_default_bounds(void);
EDGELTL_API edgeltl_status edgeltl_falsify(const edgeltl_formula* f, const edgeltl_bounds* b,
                                           unsigned jobs, int minimize,
                                           edgeltl_counterexample** out);
EDGELTL_API edgeltl_status edgeltl_counterexample_to_json(const edgeltl_counterexample* c,
                                                          char** out);
EDGELTL_API size_t edgeltl_counterexample_stem_length(const edgeltl_counterexample* c);
EDGELTL_API size_t edgeltl_counterexample_loop_length(const edgeltl_counterexample* c);
EDGELTL_API size_t edgeltl_counterexample_stutter_index(const edgeltl_counterexample* c);
EDGELTL_API void edgeltl_counterexample_free(edgeltl_counterexample* c);

/* Pattern catalog. */
EDGELTL_API edgeltl_status edgeltl_catalog_new(edgeltl_catalog** out);
EDGELTL_API edgeltl_status edgeltl_catalog_load_user(edgeltl_catalog* c, const char* document,
                                                     size_t* span_start, size_t* span_end);
EDGELTL_API size_t edgeltl_catalog_size(const edgeltl_catalog* c);
EDGELTL_API edgeltl_status edgeltl_catalog_id(const edgeltl_catalog* c, size_t index,
                                              char** out);
EDGELTL_API edgeltl_status edgeltl_catalog_body(const edgeltl_catalog* c, const char* id,
                                                char** out);
EDGELTL_API edgeltl_status edgeltl_catalog_notes(const edgeltl_catalog* c, const char* id,
                                                 char** out);
/* keys are metavariable names ("P"); warnings receives one warning per
 * line, or null when there are none. */
EDGELTL_API edgeltl_status edgeltl_catalog_instantiate(const edgeltl_catalog* c, const char* id,
                                                       const char* const* keys,
                                                       const edgeltl_formula* const* values,
                                                       size_t count, edgeltl_formula** out,
                                                       char** warnings);
/* One "<id> Closed|Unknown" line per template. */
EDGELTL_API edgeltl_status edgeltl_catalog_check(const edgeltl_catalog* c, char** report,
                                                 int* all_closed);
EDGELTL_API void edgeltl_catalog_free(edgeltl_catalog* c);

#ifdef __cplusplus
}
#endif

#endif /* EDGELTL_H */
