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

// Bottom-up labelling evaluator used to cross-check eval().

#include <vector>

#include "edgeltl/semantics.hpp"

namespace edgeltl {

namespace {

using Row = std::vector<bool>;

class Labeller {
 public:
  explicit Labeller(const LassoTrace& t)
      : t_(t), n_(t.period_end()), stem_(t.stem_length()) {}

  Row label(const Formula& f) {
    switch (f.op()) {
      case Op::Atom: {
        auto idx = t_.atoms().index_of(f.name());
        if (!idx) throw UnknownAtomError(f.name());
        Row r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = t_.state_at(i)[*idx];
        return r;
      }
      case Op::True:
        return Row(n_, true);
      case Op::False:
        return Row(n_, false);
      case Op::Not: {
        auto a = label(f.operand());
        for (std::size_t i = 0; i < n_; ++i) a[i] = !a[i];
        return a;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies:
      case Op::Iff: {
        auto a = label(f.lhs());
        auto b = label(f.rhs());
        Row r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
          switch (f.op()) {
            case Op::And: r[i] = a[i] && b[i]; break;
            case Op::Or: r[i] = a[i] || b[i]; break;
            case Op::Implies: r[i] = !a[i] || b[i]; break;
            default: r[i] = a[i] == b[i]; break;
          }
        }
        return r;
      }
      case Op::Next: {
        auto a = label(f.operand());
        Row r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = a[succ(i)];
        return r;
      }
      case Op::Rise:
      case Op::Fall:
      case Op::AnyEdge: {
        auto a = label(f.operand());
        Row r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
          bool now = a[i], then = a[succ(i)];
          r[i] = f.is(Op::Rise) ? (!now && then) : f.is(Op::Fall) ? (now && !then)
                                                                  : (now != then);
        }
        return r;
      }
      case Op::Always: {
        auto a = label(f.operand());
        // Greatest fixpoint of  X = a & next(X).
        return fixpoint(true, [&](std::size_t i, bool nxt) { return a[i] && nxt; });
      }
      case Op::Eventually: {
        auto a = label(f.operand());
        // Least fixpoint of  X = a | next(X).
        return fixpoint(false, [&](std::size_t i, bool nxt) { return a[i] || nxt; });
      }
      case Op::Until: {
        auto a = label(f.lhs());
        auto b = label(f.rhs());
        // Least fixpoint of  X = b | (a & next(X)).
        return fixpoint(false,
                        [&](std::size_t i, bool nxt) { return b[i] || (a[i] && nxt); });
      }
    }
    return Row(n_, false);
  }

 private:
  std::size_t succ(std::size_t i) const { return i + 1 < n_ ? i + 1 : stem_; }

  // Iterates the step function backwards over the loop positions until
  // nothing changes (two passes always suffice), then sweeps the stem once.
  template <class Step>
  Row fixpoint(bool init, Step step) const {
    Row r(n_, init);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = n_; i-- > stem_;) {
        bool v = step(i, r[succ(i)]);
        if (v != r[i]) {
          r[i] = v;
          changed = true;
        }
      }
    }
    for (std::size_t i = stem_; i-- > 0;) r[i] = step(i, r[i + 1]);
    return r;
  }

  const LassoTrace& t_;
  std::size_t n_;
  std::size_t stem_;
};

}  // namespace

bool eval_oracle(const Formula& f, const LassoTrace& t) {
  return Labeller(t).label(f)[0];
}

}  // namespace edgeltl
