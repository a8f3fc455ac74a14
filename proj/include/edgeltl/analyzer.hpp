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

// Syntactic closure-under-stuttering prover.
//
// A formula is closed under stuttering when repeating any single state of
// any trace never changes its value.  analyze() tries to derive that fact
// from a fixed rule set and returns either Closed with a derivation or
// Unknown with the subformulas no rule could discharge.  The prover is
// sound but not complete: Unknown never means "not closed".
//
// Rules (premises are themselves closed-under-stuttering facts):
//
//   CUS-VAR      a                                  (axiom)
//   CUS-CONST    true, false                        (axiom)
//   CUS-NOT      !A                 from A
//   CUS-AND      A & B              from A, B
//   CUS-BINOP    A | B, A -> B, A <-> B  from A, B
//   CUS-ALWAYS   G A                from A
//   CUS-EVENT    F A                from A
//   CUS-UNTIL    A U B              from A, B
//   THM-MAIN     F(!A & X A & X B)  from A, B
//   PROP-E       F(up A & X B & C)  from A, B, C
//   PROP-A       G(up A -> X B | C) from A, B, C
//   PROP-U       (!up A | X B | C) U (up D & X E & F)  from A..F
//   EDGE-DUAL    rewrites down A as up !A (and back)
//   LOGIC-REWRITE  equivalence-preserving normalization
//
// The schema rules match on the AC view of conjunctions and disjunctions.
// Conjunct and disjunct pieces other than the chosen edge are sorted into
// the next-part and the rest; an edge piece that is not the chosen one is
// split by its definition (up X contributes !X to the rest and X X to the
// next-part).  Missing parts are filled with the unit constants.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgeltl/formula.hpp"

namespace edgeltl {

enum class RuleName {
  CusVar,
  CusConst,
  CusNot,
  CusAnd,
  CusBinop,
  CusAlways,
  CusEvent,
  CusUntil,
  ThmMain,
  PropE,
  PropA,
  PropU,
  EdgeDual,
  LogicRewrite,
};

std::string_view to_string(RuleName r) noexcept;
std::optional<RuleName> rule_from_string(std::string_view s) noexcept;

struct ProofTree {
  RuleName rule;
  Formula conclusion;
  std::vector<ProofTree> premises;
  std::string note;  // empty when absent

  // Pre-order list of rule names.
  std::vector<RuleName> rules() const;
};

class Verdict {
 public:
  static Verdict closed(ProofTree proof);
  static Verdict unknown(std::vector<Formula> blockers);

  bool is_closed() const noexcept { return proof_.has_value(); }
  const ProofTree& proof() const;  // throws std::logic_error on Unknown
  const std::vector<Formula>& blockers() const noexcept { return blockers_; }

 private:
  Verdict() = default;
  std::optional<ProofTree> proof_;
  std::vector<Formula> blockers_;
};

struct AnalyzeOptions {
  // When false the input is matched as written; premises are still
  // normalized.  Mostly useful to exercise THM-MAIN directly.
  bool normalize_input = true;
};

Verdict analyze(const Formula& f, const AnalyzeOptions& options = {});

// The normalization analyze() applies before rule matching: any-edge
// expansion, edge resugaring and rewrite_logic, to a fixpoint.
Formula normalize_for_analysis(const Formula& f);

enum class ProofFormat { Text, Json };

std::string render_proof(const ProofTree& p, ProofFormat format);

}  // namespace edgeltl
