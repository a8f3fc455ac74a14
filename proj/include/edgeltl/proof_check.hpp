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


// Independent validator for analyzer derivations.
//
// Each node is checked against its rule schema using only the conclusions
// of its premises.  The schema rules compare the AC-flattened pieces of
// the conclusion with those of the schema instance rebuilt from the
// premises; LOGIC-REWRITE steps are checked semantically by exhaustive
// evaluation over small lassos.

#pragma once

#include <optional>
#include <string>

#include "edgeltl/analyzer.hpp"

namespace edgeltl {

// nullopt when every node of p is a valid rule application, otherwise a
// description of the first offending node.
std::optional<std::string> check_proof(const ProofTree& p);

}  // namespace edgeltl
