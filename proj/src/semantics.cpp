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

#include "edgeltl/semantics.hpp"

#include <cstdint>
#include <unordered_map>

namespace edgeltl {

LassoTrace::LassoTrace(AtomSet atoms, std::vector<State> stem, std::vector<State> loop)
    : atoms_(std::move(atoms)), stem_(std::move(stem)), loop_(std::move(loop)) {
  if (loop_.empty()) throw std::invalid_argument("lasso loop must not be empty");
  auto check = [&](const State& s) {
    if (s.size() != atoms_.size()) {
      throw std::invalid_argument("state has " + std::to_string(s.size()) +
                                  " values but the trace has " +
                                  std::to_string(atoms_.size()) + " atoms");
    }
  };
  for (const auto& s : stem_) check(s);
  for (const auto& s : loop_) check(s);
}

std::size_t LassoTrace::fold(std::size_t position) const noexcept {
  if (position < stem_.size()) return position;
  return stem_.size() + (position - stem_.size()) % loop_.size();
}

const State& LassoTrace::state_at(std::size_t position) const noexcept {
  auto p = fold(position);
  return p < stem_.size() ? stem_[p] : loop_[p - stem_.size()];
}

namespace {

void check_atoms(const Formula& f, const LassoTrace& t) {
  for (const auto& a : atoms_of(f)) {
    if (!t.atoms().contains(a)) throw UnknownAtomError(a);
  }
}

// Top-down evaluation over a numbered copy of the formula with a memo table
// indexed by (node, folded position).
class Evaluator {
 public:
  Evaluator(const Formula& f, const LassoTrace& t)
      : t_(t), width_(t.period_end()), bound_(t.stem_length() + 2 * t.loop_length()) {
    root_ = number(f);
    memo_.assign(nodes_.size() * width_, kUnknown);
  }

  bool at_root(std::size_t position) { return at(root_, position); }

 private:
  static constexpr std::int8_t kUnknown = -1;

  struct Node {
    Op op;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t atom = 0;
  };

  std::size_t number(const Formula& f) {
    if (auto it = ids_.find(f.identity()); it != ids_.end()) return it->second;
    Node n{f.op()};
    if (f.is_atom()) n.atom = *t_.atoms().index_of(f.name());
    if (arity(f.op()) >= 1) n.a = number(f.child(0));
    if (arity(f.op()) == 2) n.b = number(f.child(1));
    nodes_.push_back(n);
    ids_.emplace(f.identity(), nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  bool at(std::size_t node, std::size_t position) {
    const std::size_t p = t_.fold(position);
    auto& slot = memo_[node * width_ + p];
    if (slot == kUnknown) slot = compute(nodes_[node], p) ? 1 : 0;
    return slot == 1;
  }

  bool compute(const Node& n, std::size_t p) {
    switch (n.op) {
      case Op::Atom:
        return t_.state_at(p)[n.atom];
      case Op::True:
        return true;
      case Op::False:
        return false;
      case Op::Not:
        return !at(n.a, p);
      case Op::And:
        return at(n.a, p) && at(n.b, p);
      case Op::Or:
        return at(n.a, p) || at(n.b, p);
      case Op::Implies:
        return !at(n.a, p) || at(n.b, p);
      case Op::Iff:
        return at(n.a, p) == at(n.b, p);
      case Op::Next:
        return at(n.a, p + 1);
      case Op::Always:
        for (std::size_t i = p; i < bound_; ++i) {
          if (!at(n.a, i)) return false;
        }
        return true;
      case Op::Eventually:
        for (std::size_t i = p; i < bound_; ++i) {
          if (at(n.a, i)) return true;
        }
        return false;
      case Op::Until:
        for (std::size_t i = p; i < bound_; ++i) {
          if (at(n.b, i)) return true;
          if (!at(n.a, i)) return false;
        }
        return false;
      case Op::Rise:
        return !at(n.a, p) && at(n.a, p + 1);
      case Op::Fall:
        return at(n.a, p) && !at(n.a, p + 1);
      case Op::AnyEdge:
        return at(n.a, p) != at(n.a, p + 1);
    }
    return false;
  }

  const LassoTrace& t_;
  std::size_t width_;
  std::size_t bound_;
  std::vector<Node> nodes_;
  std::unordered_map<const void*, std::size_t> ids_;
  std::size_t root_ = 0;
  std::vector<std::int8_t> memo_;
};

}  // namespace

bool eval(const Formula& f, const LassoTrace& t, std::size_t position) {
  check_atoms(f, t);
  return Evaluator(f, t).at_root(position);
}

LassoTrace stutter_at(const LassoTrace& t, std::size_t i) {
  if (i >= t.stem_length()) {
    throw std::out_of_range("stutter index " + std::to_string(i) +
                            " is outside the stem (length " +
                            std::to_string(t.stem_length()) + ")");
  }
  auto stem = t.stem();
  stem.insert(stem.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.stem()[i]);
  return LassoTrace(t.atoms(), std::move(stem), t.loop());
}

LassoTrace unroll(const LassoTrace& t, std::size_t k) {
  auto stem = t.stem();
  for (std::size_t n = 0; n < k; ++n) {
    stem.insert(stem.end(), t.loop().begin(), t.loop().end());
  }
  return LassoTrace(t.atoms(), std::move(stem), t.loop());
}

}  // namespace edgeltl
