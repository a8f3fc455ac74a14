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

#include "edgeltl/syntax.hpp"

#include <array>
#include <vector>

namespace edgeltl {

ParseError::ParseError(Kind kind, SourceSpan span, const std::string& message)
    : std::runtime_error(message + " at " + std::to_string(span.start) + ".." +
                         std::to_string(span.end)),
      kind_(kind),
      span_(span) {}

namespace {

constexpr std::array<std::string_view, 5> kReserved = {"true", "false", "up", "down",
                                                       "edge"};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_char(char c) { return is_lower(c) || is_digit(c) || c == '_'; }

}  // namespace

bool is_reserved_word(std::string_view word) noexcept {
  for (auto r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

bool is_valid_atom_name(std::string_view name) noexcept {
  if (name.empty() || !is_lower(name.front())) return false;
  for (char c : name) {
    if (!is_word_char(c)) return false;
  }
  return !is_reserved_word(name);
}

namespace {

enum class Tok {
  Ident,
  True,
  False,
  Not,
  Next,
  Always,
  Eventually,
  Up,
  Down,
  Edge,
  Until,
  And,
  Or,
  Implies,
  Iff,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  SourceSpan span;
  std::string text;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto single = [&](Tok t) {
      out.push_back({t, {start, start + 1}, std::string(1, c)});
      ++i;
    };
    switch (c) {
      case '!': single(Tok::Not); continue;
      case '&': single(Tok::And); continue;
      case '|': single(Tok::Or); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case 'X': single(Tok::Next); continue;
      case 'G': single(Tok::Always); continue;
      case 'F': single(Tok::Eventually); continue;
      case 'U': single(Tok::Until); continue;
      default: break;
    }
    if (src.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, {start, start + 2}, "->"});
      i += 2;
      continue;
    }
    if (src.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, {start, start + 3}, "<->"});
      i += 3;
      continue;
    }
    if (is_lower(c)) {
      while (i < src.size() && is_word_char(src[i])) ++i;
      std::string word(src.substr(start, i - start));
      Tok kind = Tok::Ident;
      if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      else if (word == "up") kind = Tok::Up;
      else if (word == "down") kind = Tok::Down;
      else if (word == "edge") kind = Tok::Edge;
      out.push_back({kind, {start, i}, std::move(word)});
      continue;
    }
    throw ParseError(ParseError::Kind::Lexical, {start, start + 1},
                     std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, {src.size(), src.size()}, ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    auto f = parse_iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, peek().span,
                     peek().kind == Tok::End ? "unexpected end of input" : msg);
  }

  Formula parse_iff() {
    auto lhs = parse_implies();
    while (accept(Tok::Iff)) lhs = iff(lhs, parse_implies());
    return lhs;
  }

  Formula parse_implies() {
    auto lhs = parse_or();
    if (accept(Tok::Implies)) return implies(lhs, parse_implies());
    return lhs;
  }

  Formula parse_or() {
    auto lhs = parse_and();
    while (accept(Tok::Or)) lhs = disj(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    auto lhs = parse_until();
    while (accept(Tok::And)) lhs = conj(lhs, parse_until());
    return lhs;
  }

  Formula parse_until() {
    auto lhs = parse_unary();
    if (accept(Tok::Until)) return until(lhs, parse_until());
    return lhs;
  }

  bool starts_operand(Tok k) const {
    switch (k) {
      case Tok::Until:
      case Tok::And:
      case Tok::Or:
      case Tok::Implies:
      case Tok::Iff:
      case Tok::RParen:
      case Tok::End:
        return false;
      default:
        return true;
    }
  }

  Formula parse_unary() {
    const Tok k = peek().kind;
    if ((k == Tok::Up || k == Tok::Down || k == Tok::Edge) &&
        !starts_operand(toks_[pos_ + 1].kind)) {
      throw ParseError(ParseError::Kind::ReservedWord, peek().span,
                       "reserved word '" + peek().text + "' used as atom");
    }
    switch (k) {
      case Tok::Not: take(); return neg(parse_unary());
      case Tok::Next: take(); return next(parse_unary());
      case Tok::Always: take(); return always(parse_unary());
      case Tok::Eventually: take(); return eventually(parse_unary());
      case Tok::Up: take(); return rise(parse_unary());
      case Tok::Down: take(); return fall(parse_unary());
      case Tok::Edge: take(); return any_edge(parse_unary());
      default: return parse_primary();
    }
  }

  Formula parse_primary() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::Ident: take(); return atom(t.text);
      case Tok::True: take(); return top();
      case Tok::False: take(); return bottom();
      case Tok::LParen: {
        take();
        auto f = parse_iff();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return f;
      }
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength; larger binds tighter.
int level(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Until: return 5;
    case Op::Atom:
    case Op::True:
    case Op::False: return 7;
    default: return 6;
  }
}

bool is_binary(Op op) { return arity(op) == 2; }

const char* binary_symbol(Op op) {
  switch (op) {
    case Op::Iff: return " <-> ";
    case Op::Implies: return " -> ";
    case Op::Or: return " | ";
    case Op::And: return " & ";
    default: return " U ";
  }
}

const char* unary_symbol(Op op) {
  switch (op) {
    case Op::Not: return "!";
    case Op::Next: return "X";
    case Op::Always: return "G";
    case Op::Eventually: return "F";
    case Op::Rise: return "up";
    case Op::Fall: return "down";
    default: return "edge";
  }
}

void render_into(const Formula& f, std::string& out);

void render_child(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  const Op op = f.op();
  switch (op) {
    case Op::Atom: out += f.name(); return;
    case Op::True: out += "true"; return;
    case Op::False: out += "false"; return;
    default: break;
  }
  if (arity(op) == 1) {
    const Formula& x = f.operand();
    bool parens = is_binary(x.op()) || (op == Op::Not && is_edge(x.op()));
    out += unary_symbol(op);
    // "G(...)", "!a", "G a", "up a"
    if (!parens && (op != Op::Not)) out += ' ';
    render_child(x, parens, out);
    return;
  }
  const int mine = level(op);
  const bool right_assoc = op == Op::Until || op == Op::Implies;
  const bool loose = op == Op::Implies || op == Op::Iff;
  const Formula& l = f.lhs();
  const Formula& r = f.rhs();
  bool lp = right_assoc ? level(l.op()) <= mine : level(l.op()) < mine;
  bool rp = right_assoc ? level(r.op()) < mine : level(r.op()) <= mine;
  if (loose) {
    lp = lp || is_binary(l.op());
    rp = rp || is_binary(r.op());
  }
  render_child(l, lp, out);
  out += binary_symbol(op);
  render_child(r, rp, out);
}

}  // namespace

Formula parse(std::string_view text) {
  return Parser(lex(text)).parse_all();
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace edgeltl
