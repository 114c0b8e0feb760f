// Copyright 2026 The eropc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EROP_PARSER_HPP_
#define EROP_PARSER_HPP_

#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erop/ast.hpp"
#include "erop/lexer.hpp"
#include "erop/source.hpp"

namespace erop {

namespace detail {

/// Recursive-descent parser for the EROP contract grammar:
///
///   contract      := decl+ rule*
///   decl          := "roleplayer" identList ";"
///                  | "businessoperation" identList ";"
///                  | "compoblig" IDENT "(" identList ")" [";"]
///   rule          := "rule" STRING "when" eventMatch constraint*
///                    "then" action+ "end"
///   eventMatch    := IDENT "matches" "(" field ("," field)* ")"
///   field         := IDENT "==" IDENT
///   constraint    := IDENT "in" IDENT "." ropset
///                  | IDENT "." "BizFail" "==" bool
///                  | IDENT "." "timestamp" ("==" | "<" | ">") STRING
///                  | IDENT "." timeUnit "in" "[" INT "," INT "]"
///                  | ["not"] "happened" "(" field ("," field)* ")"
///   action        := IDENT "." ropset ("+=" | "-=") IDENT "(" actuals ")"
///                  | IDENT "." "BizFail" "==" bool
///                  | "reset" IDENT | IDENT "reset"
///                  | "if" "(" constraint ([","] constraint)* ")"
///                    "then" action+ ["else" action+] "endif"
///
/// Field names, ROP-set names, time units, `BizFail`, `happened` and `not`
/// are contextual identifiers.
class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::kEof) {
      throw std::invalid_argument("token stream must end with EOF");
    }
  }

  ast::Contract parse_contract() {
    ast::Contract c;
    if (!is_decl_start(cur().kind)) {
      fail("expected declaration ('roleplayer', 'businessoperation' or "
           "'compoblig')");
    }
    while (is_decl_start(cur().kind)) c.decls.push_back(parse_decl());
    while (cur().kind != TokenKind::kEof) {
      if (is_decl_start(cur().kind)) {
        fail("declarations must precede rules");
      }
      if (cur().kind != TokenKind::kRule) fail("expected 'rule'");
      c.rules.push_back(parse_rule());
    }
    return c;
  }

 private:
  static bool is_decl_start(TokenKind k) {
    return k == TokenKind::kRolePlayer || k == TokenKind::kBusinessOperation ||
           k == TokenKind::kCompOblig;
  }

  const Token& cur() const { return toks_[idx_]; }
  const Token& ahead(std::size_t n) const {
    std::size_t i = idx_ + n;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(TokenKind k) const { return cur().kind == k; }
  bool at_word(std::string_view w, std::size_t n = 0) const {
    const Token& t = ahead(n);
    return t.kind == TokenKind::kIdent && t.lexeme == w;
  }

  const Token& bump() {
    const Token& t = toks_[idx_];
    if (t.kind != TokenKind::kEof) ++idx_;
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = cur();
    std::string found = t.kind == TokenKind::kEof
                            ? std::string("end of file")
                            : "'" + t.lexeme + "'";
    throw ParseError(make_error(codes::kSyntax, what + ", found " + found, t.pos));
  }

  const Token& expect(TokenKind k) {
    if (!at(k)) fail("expected " + std::string(token_kind_name(k)));
    return bump();
  }

  ast::Ident expect_ident() {
    const Token& t = expect(TokenKind::kIdent);
    return {t.lexeme, t.pos};
  }

  ast::Ident expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'");
    return expect_ident();
  }

  std::vector<ast::Ident> parse_ident_list() {
    std::vector<ast::Ident> out;
    out.push_back(expect_ident());
    while (at(TokenKind::kComma)) {
      bump();
      out.push_back(expect_ident());
    }
    return out;
  }

  ast::Decl parse_decl() {
    const Token& kw = bump();
    switch (kw.kind) {
      case TokenKind::kRolePlayer: {
        ast::RolePlayers d{kw.pos, parse_ident_list()};
        expect(TokenKind::kSemicolon);
        return d;
      }
      case TokenKind::kBusinessOperation: {
        ast::BusinessOps d{kw.pos, parse_ident_list()};
        expect(TokenKind::kSemicolon);
        return d;
      }
      default: {
        ast::CompOblig d;
        d.pos = kw.pos;
        d.name = expect_ident();
        expect(TokenKind::kLParen);
        d.members = parse_ident_list();
        expect(TokenKind::kRParen);
        if (at(TokenKind::kSemicolon)) bump();
        return d;
      }
    }
  }

  std::vector<ast::EventField> parse_fields() {
    std::vector<ast::EventField> out;
    expect(TokenKind::kLParen);
    for (;;) {
      ast::EventField f;
      f.name = expect_ident();
      expect(TokenKind::kEqEq);
      f.value = expect_ident();
      out.push_back(std::move(f));
      if (!at(TokenKind::kComma)) break;
      bump();
    }
    expect(TokenKind::kRParen);
    return out;
  }

  ast::Rule parse_rule() {
    ast::Rule r;
    r.pos = expect(TokenKind::kRule).pos;
    const Token& name = expect(TokenKind::kString);
    r.name = {std::string(name.string_value()), name.pos};
    if (r.name.text.empty()) {
      throw ParseError(
          make_error(codes::kSyntax, "rule name must not be empty", name.pos));
    }
    expect(TokenKind::kWhen);
    r.event_var = expect_ident();
    expect(TokenKind::kMatches);
    r.event_fields = parse_fields();
    while (!at(TokenKind::kThen)) r.constraints.push_back(parse_constraint("'then'"));
    bump();
    r.actions = parse_actions(/*in_if=*/false);
    expect(TokenKind::kEnd);
    return r;
  }

  bool at_historical() const {
    if (at_word("happened") && ahead(1).kind == TokenKind::kLParen) return true;
    return at_word("not") && at_word("happened", 1);
  }

  ast::Constraint parse_constraint(std::string_view follow) {
    if (at_historical()) {
      ast::Historical h;
      h.pos = cur().pos;
      if (at_word("not")) {
        bump();
        h.happened = false;
      }
      expect_word("happened");
      h.fields = parse_fields();
      return h;
    }
    if (!at(TokenKind::kIdent)) fail("expected constraint or " + std::string(follow));

    if (ahead(1).kind == TokenKind::kIn) {
      ast::RopMembership m;
      m.bo = expect_ident();
      bump();
      m.player = expect_ident();
      expect(TokenKind::kDot);
      m.set = parse_rop_set();
      return m;
    }

    if (ahead(1).kind == TokenKind::kDot && ahead(2).kind == TokenKind::kIdent) {
      std::string_view member = ahead(2).lexeme;
      if (member == "BizFail") {
        ast::OutcomeCheck o;
        o.bo = expect_ident();
        bump();
        bump();
        expect(TokenKind::kEqEq);
        o.value = expect_ident();
        return o;
      }
      if (member == "timestamp") {
        ast::TimeDirect t;
        t.event_var = expect_ident();
        bump();
        bump();
        switch (cur().kind) {
          case TokenKind::kEqEq: t.op = CompareOp::kEq; break;
          case TokenKind::kLess: t.op = CompareOp::kLess; break;
          case TokenKind::kGreater: t.op = CompareOp::kGreater; break;
          default: fail("expected '==', '<' or '>'");
        }
        bump();
        const Token& s = expect(TokenKind::kString);
        t.timestamp = std::string(s.string_value());
        t.timestamp_pos = s.pos;
        return t;
      }
      if (auto unit = time_unit_from(member)) {
        ast::TimePartial t;
        t.event_var = expect_ident();
        bump();
        bump();
        t.unit = *unit;
        expect(TokenKind::kIn);
        t.range_pos = expect(TokenKind::kLBracket).pos;
        t.lo = parse_int();
        expect(TokenKind::kComma);
        t.hi = parse_int();
        expect(TokenKind::kRBracket);
        return t;
      }
      idx_ += 2;
      fail("expected 'BizFail', 'timestamp' or a time unit");
    }
    fail("expected constraint or " + std::string(follow));
  }

  long parse_int() {
    const Token& t = expect(TokenKind::kInt);
    long v = 0;
    auto [p, ec] =
        std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), v);
    if (ec != std::errc()) {
      throw ParseError(make_error(codes::kSyntax,
                                  "integer literal '" + t.lexeme + "' out of range",
                                  t.pos));
    }
    return v;
  }

  RopSet parse_rop_set() {
    if (at(TokenKind::kIdent)) {
      if (auto s = rop_set_from(cur().lexeme)) {
        bump();
        return *s;
      }
    }
    fail("expected 'rights', 'obligs' or 'prohibs'");
  }

  static bool ends_action_list(TokenKind k) {
    return k == TokenKind::kEnd || k == TokenKind::kElse ||
           k == TokenKind::kEndIf || k == TokenKind::kEof;
  }

  std::vector<ast::Action> parse_actions(bool in_if) {
    std::vector<ast::Action> out;
    if (ends_action_list(cur().kind)) fail("expected action");
    while (!ends_action_list(cur().kind)) out.push_back(parse_action(in_if));
    return out;
  }

  ast::Action parse_action(bool in_if) {
    if (at(TokenKind::kIf)) {
      if (in_if) fail("nested 'if' statements are not supported");
      return {parse_if()};
    }
    if (at(TokenKind::kReset)) {
      bump();
      return {ast::Reset{expect_ident()}};
    }
    if (!at(TokenKind::kIdent)) fail("expected action");
    if (ahead(1).kind == TokenKind::kReset) {
      ast::Reset r{expect_ident()};
      bump();
      return {r};
    }
    if (ahead(1).kind != TokenKind::kDot) {
      bump();
      fail("expected '.' or 'reset'");
    }
    if (at_word("BizFail", 2)) {
      ast::OutcomeSet o;
      o.bo = expect_ident();
      bump();
      bump();
      expect(TokenKind::kEqEq);
      o.value = expect_ident();
      return {o};
    }

    ast::RopManip m;
    m.player = expect_ident();
    bump();
    if (!at(TokenKind::kIdent) || !rop_set_from(cur().lexeme)) {
      fail("expected 'rights', 'obligs', 'prohibs' or 'BizFail'");
    }
    m.set = parse_rop_set();
    if (at(TokenKind::kPlusEq)) {
      m.op = ManipOp::kAdd;
    } else if (at(TokenKind::kMinusEq)) {
      m.op = ManipOp::kRemove;
    } else {
      fail("expected '+=' or '-='");
    }
    bump();
    m.bo = expect_ident();
    expect(TokenKind::kLParen);
    for (;;) {
      if (at(TokenKind::kIdent)) {
        m.args.push_back({false, cur().lexeme, cur().pos});
      } else if (at(TokenKind::kString)) {
        m.args.push_back({true, std::string(cur().string_value()), cur().pos});
      } else {
        fail("expected identifier or string literal");
      }
      bump();
      if (!at(TokenKind::kComma)) break;
      bump();
    }
    expect(TokenKind::kRParen);
    return {m};
  }

  ast::If parse_if() {
    ast::If node;
    node.pos = expect(TokenKind::kIf).pos;
    expect(TokenKind::kLParen);
    node.cond.push_back(parse_constraint("')'"));
    while (!at(TokenKind::kRParen)) {
      if (at(TokenKind::kComma)) bump();
      node.cond.push_back(parse_constraint("')'"));
    }
    bump();
    expect(TokenKind::kThen);
    node.then_actions = parse_actions(/*in_if=*/true);
    if (at(TokenKind::kElse)) {
      bump();
      node.else_actions = parse_actions(/*in_if=*/true);
    }
    expect(TokenKind::kEndIf);
    return node;
  }

  std::span<const Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace detail

/// Parses a token stream produced by tokenize(). Throws ParseError on the
/// first syntax error.
inline ast::Contract parse_contract(std::span<const Token> tokens) {
  return detail::Parser(tokens).parse_contract();
}

/// tokenize() followed by parse_contract().
inline ast::Contract parse_source(std::string_view source) {
  std::vector<Token> toks = tokenize(source);
  return parse_contract(toks);
}

}  // namespace erop

#endif  // EROP_PARSER_HPP_
