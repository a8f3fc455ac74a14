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


#include "edgeltl/falsifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace edgeltl {

namespace {

using Code = std::uint32_t;
using Word = std::vector<Code>;

struct Node {
  Op op;
  int a = -1;
  int b = -1;
  int atom = -1;
};

// Post-order node array with shared subterms; children precede parents.
class Compiled {
 public:
  Compiled(const Formula& f, const AtomSet& atoms) : atoms_(atoms) { root_ = add(f); }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  int root() const noexcept { return root_; }

 private:
  int add(const Formula& f) {
    if (auto it = index_.find(f); it != index_.end()) return it->second;
    Node n{f.op()};
    if (f.is_atom()) n.atom = static_cast<int>(*atoms_.index_of(f.name()));
    if (arity(f.op()) >= 1) n.a = add(f.child(0));
    if (arity(f.op()) == 2) n.b = add(f.child(1));
    nodes_.push_back(n);
    int id = static_cast<int>(nodes_.size()) - 1;
    index_.emplace(f, id);
    return id;
  }

  const AtomSet& atoms_;
  std::vector<Node> nodes_;
  std::unordered_map<Formula, int> index_;
  int root_ = -1;
};

// Truth of atom k in the state with search code e (all-true is code 0).
class StateTable {
 public:
  explicit StateTable(std::size_t atoms) : n_(atoms), count_(Code{1} << atoms) {}
  std::size_t count() const noexcept { return count_; }
  bool value(Code e, std::size_t k) const noexcept {
    return (((count_ - 1) - e) >> (n_ - 1 - k)) & 1u;
  }
  State state(Code e) const {
    std::vector<bool> v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = value(e, k);
    return State(std::move(v));
  }

 private:
  std::size_t n_;
  Code count_;
};

// Labels every node at every position of one lasso word, then answers
// "does stuttering position i change the root value" by recomputing only
// positions i, i-1, ... of the stuttered word until the labels rejoin.
class Engine {
 public:
  Engine(const Compiled& c, const StateTable& states)
      : nodes_(c.nodes()), root_(static_cast<std::size_t>(c.root())), states_(states),
        m_(nodes_.size()) {}

  void label(const Word& word, std::size_t loop_start) {
    word_ = &word;
    n_ = word.size();
    loop_start_ = loop_start;
    lab_.assign(n_ * m_, 0);
    for (std::size_t k = 0; k < m_; ++k) label_node(k);
  }

  bool root_value() const { return at(0, root_); }

  // Smallest i < limit whose stutter flips the root; sets `after`.
  std::optional<std::size_t> first_flip(std::size_t limit, bool& after) {
    cur_.resize(m_);
    nxt_.resize(m_);
    for (std::size_t i = 0; i < limit; ++i) {
      std::copy_n(lab_.begin() + static_cast<std::ptrdiff_t>(i * m_), m_, nxt_.begin());
      for (std::size_t j = i + 1; j-- > 0;) {
        step(j);
        if (std::equal(cur_.begin(), cur_.end(),
                       lab_.begin() + static_cast<std::ptrdiff_t>(j * m_))) {
          break;
        }
        if (j == 0) {
          if (cur_[root_] != at(0, root_)) {
            after = cur_[root_];
            return i;
          }
          break;
        }
        std::swap(cur_, nxt_);
      }
    }
    return std::nullopt;
  }

 private:
  bool at(std::size_t pos, std::size_t node) const { return lab_[pos * m_ + node]; }
  void set(std::size_t pos, std::size_t node, bool v) { lab_[pos * m_ + node] = v; }
  std::size_t succ(std::size_t p) const { return p + 1 < n_ ? p + 1 : loop_start_; }

  bool local(const Node& nd, std::size_t p, bool nxt_self) const {
    auto a = [&] { return at(p, static_cast<std::size_t>(nd.a)); };
    auto b = [&] { return at(p, static_cast<std::size_t>(nd.b)); };
    auto na = [&] { return at(succ(p), static_cast<std::size_t>(nd.a)); };
    switch (nd.op) {
      case Op::Atom: return states_.value((*word_)[p], static_cast<std::size_t>(nd.atom));
      case Op::True: return true;
      case Op::False: return false;
      case Op::Not: return !a();
      case Op::And: return a() && b();
      case Op::Or: return a() || b();
      case Op::Implies: return !a() || b();
      case Op::Iff: return a() == b();
      case Op::Next: return na();
      case Op::Always: return a() && nxt_self;
      case Op::Eventually: return a() || nxt_self;
      case Op::Until: return b() || (a() && nxt_self);
      case Op::Rise: return !a() && na();
      case Op::Fall: return a() && !na();
      case Op::AnyEdge: return a() != na();
    }
    return false;
  }

  void label_node(std::size_t k) {
    const Node& nd = nodes_[k];
    const bool temporal =
        nd.op == Op::Always || nd.op == Op::Eventually || nd.op == Op::Until;
    if (!temporal) {
      for (std::size_t p = 0; p < n_; ++p) set(p, k, local(nd, p, false));
      return;
    }
    const bool init = nd.op == Op::Always;
    for (std::size_t p = loop_start_; p < n_; ++p) set(p, k, init);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t p = n_; p-- > loop_start_;) {
        bool v = local(nd, p, at(succ(p), k));
        if (v != at(p, k)) {
          set(p, k, v);
          changed = true;
        }
      }
    }
    for (std::size_t p = loop_start_; p-- > 0;) set(p, k, local(nd, p, at(p + 1, k)));
  }

  // cur_ = labels of the stuttered word at position j (state word[j]) given
  // nxt_ = its labels at j + 1.
  void step(std::size_t j) {
    const Code s = (*word_)[j];
    for (std::size_t k = 0; k < m_; ++k) {
      const Node& nd = nodes_[k];
      const auto a = static_cast<std::size_t>(nd.a);
      const auto b = static_cast<std::size_t>(nd.b);
      bool v = false;
      switch (nd.op) {
        case Op::Atom: v = states_.value(s, static_cast<std::size_t>(nd.atom)); break;
        case Op::True: v = true; break;
        case Op::False: v = false; break;
        case Op::Not: v = !cur_[a]; break;
        case Op::And: v = cur_[a] && cur_[b]; break;
        case Op::Or: v = cur_[a] || cur_[b]; break;
        case Op::Implies: v = !cur_[a] || cur_[b]; break;
        case Op::Iff: v = cur_[a] == cur_[b]; break;
        case Op::Next: v = nxt_[a]; break;
        case Op::Always: v = cur_[a] && nxt_[k]; break;
        case Op::Eventually: v = cur_[a] || nxt_[k]; break;
        case Op::Until: v = cur_[b] || (cur_[a] && nxt_[k]); break;
        case Op::Rise: v = !cur_[a] && nxt_[a]; break;
        case Op::Fall: v = cur_[a] && !nxt_[a]; break;
        case Op::AnyEdge: v = cur_[a] != nxt_[a]; break;
      }
      cur_[k] = v;
    }
  }

  const std::vector<Node>& nodes_;
  std::size_t root_;
  const StateTable& states_;
  std::size_t m_;
  const Word* word_ = nullptr;
  std::size_t n_ = 0;
  std::size_t loop_start_ = 0;
  std::vector<std::uint8_t> lab_;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> nxt_;
};

// All sequences of length min_len..max_len over `count` symbols, by length
// then lexicographically.
std::vector<Word> sequences(std::size_t count, std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    Word w(len, 0);
    for (;;) {
      out.push_back(w);
      std::size_t k = len;
      while (k > 0 && w[k - 1] + 1 == count) w[--k] = 0;
      if (k == 0) break;
      ++w[k - 1];
    }
  }
  return out;
}

std::vector<State> to_states(const Word& w, const StateTable& t) {
  std::vector<State> out;
  out.reserve(w.size());
  for (Code c : w) out.push_back(t.state(c));
  return out;
}

struct Hit {
  std::size_t lasso;  // global search index
  std::size_t unroll;
  std::size_t index;
  bool before;
  bool after;
};

}  // namespace

AtomSet search_atoms(const Formula& f) {
  auto names = atoms_of(f);
  if (names.empty()) return AtomSet{"x"};
  return names;
}

std::optional<Counterexample> falsify(const Formula& f, const SearchBounds& b,
                                      unsigned jobs) {
  if (b.max_loop == 0) throw std::invalid_argument("max_loop must be at least 1");
  const auto real = atoms_of(f);
  if (real.size() > b.atom_cap) throw AtomCapError(real.size(), b.atom_cap);
  const AtomSet atoms = search_atoms(f);
  const StateTable table(atoms.size());
  const Compiled compiled(f, atoms);
  const auto stems = sequences(table.count(), 0, b.max_stem);
  const auto loops = sequences(table.count(), 1, b.max_loop);
  const std::size_t total = stems.size() * loops.size();

  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::optional<Hit> found;
  std::mutex found_mutex;

  auto worker = [&](unsigned w) {
    Engine engine(compiled, table);
    Word word;
    for (std::size_t g = w; g < total && g < best.load(); g += jobs) {
      const Word& stem = stems[g / loops.size()];
      const Word& loop = loops[g % loops.size()];
      word = stem;
      for (std::size_t k = 0; k <= b.max_unroll; ++k) {
        word.insert(word.end(), loop.begin(), loop.end());
      }
      const std::size_t loop_start = stem.size() + b.max_unroll * loop.size();
      engine.label(word, loop_start);
      bool after = false;
      auto i = engine.first_flip(loop_start, after);
      if (!i) continue;
      std::size_t k = 0;
      while (*i >= stem.size() + k * loop.size()) ++k;
      std::lock_guard lock(found_mutex);
      if (!found || g < found->lasso) {
        found = Hit{g, k, *i, engine.root_value(), after};
        best.store(g);
      }
      return;
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  if (!found) return std::nullopt;
  const Word& stem = stems[found->lasso / loops.size()];
  const Word& loop = loops[found->lasso % loops.size()];
  LassoTrace t(atoms, to_states(stem, table), to_states(loop, table));
  return Counterexample{unroll(t, found->unroll), found->index, found->before, found->after};
}

Counterexample minimize(const Counterexample& c, const Formula& f) {
  const AtomSet& atoms = c.trace.atoms();
  const StateTable table(atoms.size());
  const Compiled compiled(f, atoms);
  Engine engine(compiled, table);
  for (std::size_t s = 1; s <= c.trace.stem_length(); ++s) {
    const auto stems = sequences(table.count(), s, s);
    for (std::size_t l = 1; l <= c.trace.loop_length(); ++l) {
      const auto loops = sequences(table.count(), l, l);
      for (const auto& stem : stems) {
        for (const auto& loop : loops) {
          Word word = stem;
          word.insert(word.end(), loop.begin(), loop.end());
          engine.label(word, s);
          bool after = false;
          auto i = engine.first_flip(s, after);
          if (!i) continue;
          LassoTrace t(atoms, to_states(stem, table), to_states(loop, table));
          return Counterexample{std::move(t), *i, engine.root_value(), after};
        }
      }
    }
  }
  return c;
}

bool is_valid_counterexample(const Counterexample& c, const Formula& f) {
  if (c.stutter_index >= c.trace.stem_length()) return false;
  if (c.value_before == c.value_after) return false;
  return eval(f, c.trace) == c.value_before &&
         eval(f, stutter_at(c.trace, c.stutter_index)) == c.value_after;
}

}  // namespace edgeltl
