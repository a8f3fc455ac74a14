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


// JSON documents: traces, counterexamples and proofs.
//
//   trace           {"atoms": [..], "stem": [[bool..]..], "loop": [[bool..]..]}
//   counterexample  {"formula", "trace", "stutter_index", "value_before",
//                    "value_after"}
//   proof           {"rule", "conclusion", "premises": [..], "note"?}

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "edgeltl/analyzer.hpp"
#include "edgeltl/falsifier.hpp"
#include "edgeltl/semantics.hpp"

namespace edgeltl {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trace_to_json(const LassoTrace& t);
LassoTrace trace_from_json(std::string_view text);

struct CounterexampleDocument {
  Formula formula;
  Counterexample counterexample;
};

std::string counterexample_to_json(const Formula& f, const Counterexample& c);
CounterexampleDocument counterexample_from_json(std::string_view text);

// Inverse of render_proof(p, ProofFormat::Json).
ProofTree proof_from_json(std::string_view text);

}  // namespace edgeltl
