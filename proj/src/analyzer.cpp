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

#include "edgeltl/analyzer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "edgeltl/rewrite.hpp"
#include "edgeltl/syntax.hpp"

namespace edgeltl {

namespace {

constexpr std::array<std::pair<RuleName, std::string_view>, 14> kRuleNames = {{
    {RuleName::CusVar, "CUS-VAR"},
    {RuleName::CusConst, "CUS-CONST"},
    {RuleName::CusNot, "CUS-NOT"},
    {RuleName::CusAnd, "CUS-AND"},
    {RuleName::CusBinop, "CUS-BINOP"},
    {RuleName::CusAlways, "CUS-ALWAYS"},
    {RuleName::CusEvent, "CUS-EVENT"},
    {RuleName::CusUntil, "CUS-UNTIL"},
    {RuleName::ThmMain, "THM-MAIN"},
    {RuleName::PropE, "PROP-E"},
    {RuleName::PropA, "PROP-A"},
    {RuleName::PropU, "PROP-U"},
    {RuleName::EdgeDual, "EDGE-DUAL"},
    {RuleName::LogicRewrite, "LOGIC-REWRITE"},
}};

}  // namespace

std::string_view to_string(RuleName r) noexcept {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<RuleName> rule_from_string(std::string_view s) noexcept {
  for (const auto& [rule, name] : kRuleNames) {
    if (name == s) return rule;
  }
  return std::nullopt;
}

std::vector<RuleName> ProofTree::rules() const {
  std::vector<RuleName> out{rule};
  for (const auto& p : premises) {
    auto sub = p.rules();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

Verdict Verdict::closed(ProofTree proof) {
  Verdict v;
  v.proof_ = std::move(proof);
  return v;
}

Verdict Verdict::unknown(std::vector<Formula> blockers) {
  if (blockers.empty()) throw std::invalid_argument("Unknown verdict needs a blocker");
  Verdict v;
  v.blockers_ = std::move(blockers);
  return v;
}

const ProofTree& Verdict::proof() const {
  if (!proof_) throw std::logic_error("verdict is Unknown and carries no proof");
  return *proof_;
}

Formula normalize_for_analysis(const Formula& f) {
  Formula cur = f;
  for (;;) {
    auto nxt = rewrite_logic(resugar_edges(expand_any_edge(cur)));
    if (nxt == cur) return cur;
    cur = nxt;
  }
}

namespace {

struct Outcome {
  std::optional<ProofTree> proof;
  std::vector<Formula> blockers;

  bool ok() const { return proof.has_value(); }
};

Outcome success(RuleName rule, Formula conclusion, std::vector<ProofTree> premises,
                std::string note = {}) {
  return {ProofTree{rule, std::move(conclusion), std::move(premises), std::move(note)},
          {}};
}

void add_blockers(std::vector<Formula>& into, const std::vector<Formula>& from) {
  for (const auto& b : from) {
    if (std::find(into.begin(), into.end(), b) == into.end()) into.push_back(b);
  }
}

// Result of sorting the pieces of a conjunct (disjunct) list around the
// chosen edge.
struct Split {
  std::vector<Formula> nexts;
  std::vector<Formula> rest;
};

// Pieces of a conjunction other than the chosen up edge.
Split split_conjuncts(const std::vector<Formula>& items, std::size_t chosen) {
  Split s;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k == chosen) continue;
    const auto& it = items[k];
    switch (it.op()) {
      case Op::Next:
        s.nexts.push_back(it.operand());
        break;
      case Op::Rise:  // !X & X X
        s.rest.push_back(negate(it.operand()));
        s.nexts.push_back(it.operand());
        break;
      case Op::Fall:  // X & X !X
        s.rest.push_back(it.operand());
        s.nexts.push_back(negate(it.operand()));
        break;
      default:
        s.rest.push_back(it);
    }
  }
  return s;
}

// Pieces of a disjunction other than the chosen negated up edge.
Split split_disjuncts(const std::vector<Formula>& items, std::size_t chosen) {
  Split s;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k == chosen) continue;
    const auto& it = items[k];
    if (it.is(Op::Next)) {
      s.nexts.push_back(it.operand());
    } else if (it.is(Op::Not) && it.operand().is(Op::Next)) {
      s.nexts.push_back(negate(it.operand().operand()));
    } else if (it.is(Op::Not) && it.operand().is(Op::Rise)) {  // X | X !X
      s.rest.push_back(it.operand().operand());
      s.nexts.push_back(negate(it.operand().operand()));
    } else if (it.is(Op::Not) && it.operand().is(Op::Fall)) {  // !X | X X
      s.rest.push_back(negate(it.operand().operand()));
      s.nexts.push_back(it.operand().operand());
    } else {
      s.rest.push_back(it);
    }
  }
  return s;
}

// Disjunct view of the body of an always: antecedent conjuncts of an
// implication contribute their negations.
std::vector<Formula> disjunct_view(const Formula& body) {
  if (body.is(Op::Implies)) {
    std::vector<Formula> items;
    for (const auto& c : flatten(body.lhs(), Op::And)) items.push_back(negate(c));
    for (const auto& d : flatten(body.rhs(), Op::Or)) items.push_back(d);
    return items;
  }
  return flatten(body, Op::Or);
}

// An edge candidate: the edge's operand after duality (down X is up !X).
struct Candidate {
  std::size_t index;
  Formula operand;            // A such that the item is up A (or !up A)
  std::optional<Formula> fall;  // the original down X when duality applies
};

std::vector<Candidate> rise_candidates(const std::vector<Formula>& items, bool negated) {
  std::vector<Candidate> out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Formula* e = &items[k];
    if (negated) {
      if (!e->is(Op::Not)) continue;
      e = &e->operand();
    }
    if (e->is(Op::Rise)) out.push_back({k, e->operand(), std::nullopt});
    else if (e->is(Op::Fall)) out.push_back({k, neg(e->operand()), *e});
  }
  return out;
}

Formula dualize(const Formula& f, const Candidate& c) {
  if (!c.fall) return f;
  return replace_all(f, *c.fall, rise(c.operand));
}

std::string edge_dual_note(const Candidate& c) {
  return render(*c.fall) + " = " + render(rise(c.operand));
}

class Prover {
 public:
  // Normalizes, then discharges.
  Outcome prove(const Formula& f) {
    if (auto it = proved_.find(f); it != proved_.end()) return it->second;
    auto g = normalize_for_analysis(f);
    Outcome o = discharge(g);
    if (o.ok() && !(g == f)) {
      o = success(RuleName::LogicRewrite, f, {std::move(*o.proof)},
                  "normalized for rule matching");
    }
    proved_.emplace(f, o);
    return o;
  }

  Outcome discharge(const Formula& g) {
    if (auto it = discharged_.find(g); it != discharged_.end()) return it->second;
    if (active_.contains(g)) return {std::nullopt, {g}};
    active_.insert(g);
    Outcome o = discharge_uncached(g);
    active_.erase(g);
    if (!o.ok() && o.blockers.empty()) o.blockers.push_back(g);
    discharged_.emplace(g, o);
    return o;
  }

 private:
  Outcome discharge_uncached(const Formula& g) {
    switch (g.op()) {
      case Op::Atom:
        return success(RuleName::CusVar, g, {});
      case Op::True:
      case Op::False:
        return success(RuleName::CusConst, g, {});
      case Op::Not:
        return compositional(RuleName::CusNot, g);
      case Op::And:
        return compositional(RuleName::CusAnd, g);
      case Op::Or:
      case Op::Implies:
      case Op::Iff:
        return compositional(RuleName::CusBinop, g);
      case Op::Always: {
        auto o = compositional(RuleName::CusAlways, g);
        if (o.ok()) return o;
        if (auto p = prop_a(g)) return *p;
        if (auto p = normal_form_split(g)) return *p;
        return o;
      }
      case Op::Eventually: {
        auto o = compositional(RuleName::CusEvent, g);
        if (o.ok()) return o;
        if (auto p = prop_e(g)) return *p;
        if (auto p = thm_main(g)) return *p;
        if (auto p = normal_form_split(g)) return *p;
        return o;
      }
      case Op::Until: {
        auto o = compositional(RuleName::CusUntil, g);
        if (o.ok()) return o;
        if (auto p = prop_u(g)) return *p;
        return o;
      }
      case Op::Next:
      case Op::Rise:
      case Op::Fall:
      case Op::AnyEdge:
        return {std::nullopt, {g}};
    }
    return {std::nullopt, {g}};
  }

  Outcome compositional(RuleName rule, const Formula& g) {
    std::vector<ProofTree> premises;
    std::vector<Formula> blockers;
    for (int i = 0; i < arity(g.op()); ++i) {
      auto o = prove(g.child(i));
      if (o.ok()) premises.push_back(std::move(*o.proof));
      else add_blockers(blockers, o.blockers);
    }
    if (!blockers.empty()) return {std::nullopt, std::move(blockers)};
    return success(rule, g, std::move(premises));
  }

  // Proves every formula in `parts`; nullopt if any fails.
  std::optional<std::vector<ProofTree>> prove_all(const std::vector<Formula>& parts) {
    std::vector<ProofTree> out;
    for (const auto& p : parts) {
      auto o = prove(p);
      if (!o.ok()) return std::nullopt;
      out.push_back(std::move(*o.proof));
    }
    return out;
  }

  Outcome wrap_dual(const Formula& original, ProofTree inner, const Candidate& c) {
    if (!c.fall) return {std::move(inner), {}};
    return success(RuleName::EdgeDual, original, {std::move(inner)}, edge_dual_note(c));
  }

  // F(up A & X B & C)
  std::optional<Outcome> prop_e(const Formula& g) {
    auto items = flatten(g.operand(), Op::And);
    for (const auto& c : rise_candidates(items, false)) {
      const Formula g2 = dualize(g, c);
      auto items2 = flatten(g2.operand(), Op::And);
      auto s = split_conjuncts(items2, c.index);
      auto premises = prove_all({c.operand, build(Op::And, s.nexts), build(Op::And, s.rest)});
      if (!premises) continue;
      auto node = ProofTree{RuleName::PropE, g2, std::move(*premises), {}};
      return wrap_dual(g, std::move(node), c);
    }
    return std::nullopt;
  }

  // G(up A -> X B | C), matched on the disjunct view of the body.
  std::optional<Outcome> prop_a(const Formula& g) {
    auto items = disjunct_view(g.operand());
    for (const auto& c : rise_candidates(items, true)) {
      const Formula g2 = dualize(g, c);
      auto items2 = disjunct_view(g2.operand());
      auto s = split_disjuncts(items2, c.index);
      auto premises = prove_all({c.operand, build(Op::Or, s.nexts), build(Op::Or, s.rest)});
      if (!premises) continue;
      auto node = ProofTree{RuleName::PropA, g2, std::move(*premises), {}};
      return wrap_dual(g, std::move(node), c);
    }
    return std::nullopt;
  }

  // (!up A | X B | C) U (up D & X E & F).  The right edge may be absent, in
  // which case the whole right operand is the premise F.  The left guard
  // is mandatory.
  std::optional<Outcome> prop_u(const Formula& g) {
    auto left = flatten(g.lhs(), Op::Or);
    auto right = flatten(g.rhs(), Op::And);
    auto lcands = rise_candidates(left, true);
    auto rcands = rise_candidates(right, false);
    for (const auto& lc : lcands) {
      for (std::size_t r = 0; r <= rcands.size(); ++r) {
        const bool has_right = r < rcands.size();
        Formula g2 = dualize(g, lc);
        if (has_right) g2 = dualize(g2, rcands[r]);
        auto sl = split_disjuncts(flatten(g2.lhs(), Op::Or), lc.index);
        std::vector<Formula> parts{lc.operand, build(Op::Or, sl.nexts), build(Op::Or, sl.rest)};
        if (has_right) {
          auto sr = split_conjuncts(flatten(g2.rhs(), Op::And), rcands[r].index);
          parts.push_back(rcands[r].operand);
          parts.push_back(build(Op::And, sr.nexts));
          parts.push_back(build(Op::And, sr.rest));
        } else {
          parts.push_back(g2.rhs());
        }
        auto premises = prove_all(parts);
        if (!premises) continue;
        ProofTree node{RuleName::PropU, g2, std::move(*premises), {}};
        if (!(g2 == g)) {
          std::string note;
          if (lc.fall) note = edge_dual_note(lc);
          if (has_right && rcands[r].fall) {
            if (!note.empty()) note += "; ";
            note += edge_dual_note(rcands[r]);
          }
          return success(RuleName::EdgeDual, g, {std::move(node)}, note);
        }
        return Outcome{std::move(node), {}};
      }
    }
    return std::nullopt;
  }

  // F(!A & X A & X B), for shapes that were not resugared.
  std::optional<Outcome> thm_main(const Formula& g) {
    auto items = flatten(g.operand(), Op::And);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!items[i].is(Op::Not)) continue;
      const Formula& a = items[i].operand();
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (j == i || !items[j].is(Op::Next) || !(items[j].operand() == a)) continue;
        std::vector<Formula> bodies;
        bool all_next = true;
        for (std::size_t k = 0; k < items.size(); ++k) {
          if (k == i || k == j) continue;
          if (!items[k].is(Op::Next)) {
            all_next = false;
            break;
          }
          bodies.push_back(items[k].operand());
        }
        if (!all_next) continue;
        auto premises = prove_all({a, build(Op::And, bodies)});
        if (!premises) continue;
        return success(RuleName::ThmMain, g, std::move(*premises));
      }
    }
    return std::nullopt;
  }

  // G body  =>  G clause_1 & ... & G clause_n   (conjunctive normal form)
  // F body  =>  F term_1 | ... | F term_n       (disjunctive normal form)
  std::optional<Outcome> normal_form_split(const Formula& g) {
    const bool is_always = g.is(Op::Always);
    auto nf = is_always ? to_cnf(g.operand()) : to_dnf(g.operand());
    if (!nf || nf->size() == 1) return std::nullopt;
    std::vector<Formula> parts;
    for (const auto& group : *nf) {
      auto body = build(is_always ? Op::Or : Op::And, group);
      parts.push_back(is_always ? always(body) : eventually(body));
    }
    auto h = build(is_always ? Op::And : Op::Or, parts);
    if (h == g) return std::nullopt;
    auto o = prove(h);
    if (!o.ok()) return std::nullopt;
    return success(RuleName::LogicRewrite, g, {std::move(*o.proof)},
                   is_always ? "conjunctive normal form under G"
                             : "disjunctive normal form under F");
  }

  std::unordered_map<Formula, Outcome> proved_;
  std::unordered_map<Formula, Outcome> discharged_;
  std::unordered_set<Formula> active_;
};

}  // namespace

Verdict analyze(const Formula& f, const AnalyzeOptions& options) {
  Prover prover;
  Outcome o = options.normalize_input ? prover.prove(f) : prover.discharge(f);
  if (o.ok()) return Verdict::closed(std::move(*o.proof));
  return Verdict::unknown(std::move(o.blockers));
}

namespace {

nlohmann::ordered_json proof_to_json(const ProofTree& p) {
  nlohmann::ordered_json j;
  j["rule"] = std::string(to_string(p.rule));
  j["conclusion"] = render(p.conclusion);
  auto premises = nlohmann::ordered_json::array();
  for (const auto& q : p.premises) premises.push_back(proof_to_json(q));
  j["premises"] = std::move(premises);
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

bool is_equality_step(RuleName r) {
  return r == RuleName::LogicRewrite || r == RuleName::EdgeDual;
}

std::string goals_line(const std::vector<const ProofTree*>& goals) {
  if (goals.empty()) return "true";
  std::string line;
  for (std::size_t i = 0; i < goals.size(); ++i) {
    if (i) line += " & ";
    line += "<<" + render(goals[i]->conclusion) + ">>";
  }
  return line;
}

// Goal-directed chain: the leftmost open goal is replaced by the premises
// of its rule at every step.
std::string proof_to_text(const ProofTree& root) {
  std::vector<const ProofTree*> goals{&root};
  std::string out = "    " + goals_line(goals) + "\n";
  while (!goals.empty()) {
    const ProofTree* g = goals.front();
    goals.erase(goals.begin());
    std::vector<const ProofTree*> opened;
    for (const auto& p : g->premises) opened.push_back(&p);
    goals.insert(goals.begin(), opened.begin(), opened.end());
    out += "      { " + std::string(to_string(g->rule));
    if (!g->note.empty()) out += ": " + g->note;
    out += " }\n";
    out += is_equality_step(g->rule) ? " =  " : " <= ";
    out += goals_line(goals) + "\n";
  }
  return out;
}

}  // namespace

std::string render_proof(const ProofTree& p, ProofFormat format) {
  if (format == ProofFormat::Json) return proof_to_json(p).dump(2);
  return proof_to_text(p);
}

}  // namespace edgeltl
