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


// Seeded random formula generator and exhaustive lasso enumeration shared
// by the property tests and the acceptance runner.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "edgeltl/formula.hpp"
#include "edgeltl/semantics.hpp"

namespace edgeltl::testing {

struct GenOptions {
  int max_depth = 4;
  std::vector<std::string> atoms{"a", "b"};
  bool next = true;
  bool edges = true;
  bool constants = true;
};

class FormulaGen {
 public:
  FormulaGen(std::uint64_t seed, GenOptions options) : rng_(seed), opt_(std::move(options)) {
    ops_ = {Op::Not, Op::And, Op::Or, Op::Implies, Op::Iff, Op::Always, Op::Eventually,
            Op::Until};
    if (opt_.next) ops_.push_back(Op::Next);
    if (opt_.edges) ops_.insert(ops_.end(), {Op::Rise, Op::Fall, Op::AnyEdge});
  }

  Formula operator()() { return gen(opt_.max_depth); }

  std::mt19937_64& rng() { return rng_; }

 private:
  Formula leaf() {
    if (opt_.constants && pick(10) == 0) return Formula::constant(pick(2) == 0);
    return Formula::atom(opt_.atoms[pick(opt_.atoms.size())]);
  }

  Formula gen(int depth) {
    if (depth == 0 || pick(4) == 0) return leaf();
    const Op op = ops_[pick(ops_.size())];
    if (arity(op) == 1) return Formula::unary(op, gen(depth - 1));
    return Formula::binary(op, gen(depth - 1), gen(depth - 1));
  }

  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  std::mt19937_64 rng_;
  GenOptions opt_;
  std::vector<Op> ops_;
};

inline std::vector<State> all_states(std::size_t atoms) {
  std::vector<State> out;
  for (std::size_t code = 0; code < (std::size_t{1} << atoms); ++code) {
    std::vector<bool> v(atoms);
    for (std::size_t k = 0; k < atoms; ++k) v[k] = (code >> k) & 1;
    out.emplace_back(std::move(v));
  }
  return out;
}

inline std::vector<std::vector<State>> all_sequences(std::size_t atoms, std::size_t min_len,
                                                     std::size_t max_len) {
  const auto states = all_states(atoms);
  std::vector<std::vector<State>> out, layer{{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::vector<State>> next;
    for (const auto& seq : layer) {
      for (const auto& s : states) {
        auto grown = seq;
        grown.push_back(s);
        next.push_back(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Every lasso with |stem| <= max_stem and 1 <= |loop| <= max_loop.
inline std::vector<LassoTrace> all_lassos(const AtomSet& atoms, std::size_t max_stem,
                                          std::size_t max_loop) {
  std::vector<LassoTrace> out;
  for (const auto& stem : all_sequences(atoms.size(), 0, max_stem)) {
    for (const auto& loop : all_sequences(atoms.size(), 1, max_loop)) {
      out.emplace_back(atoms, stem, loop);
    }
  }
  return out;
}

}  // namespace edgeltl::testing
