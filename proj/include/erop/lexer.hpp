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

#ifndef EROP_LEXER_HPP_
#define EROP_LEXER_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erop/source.hpp"

namespace erop {

enum class TokenKind {
  // keywords
  kRolePlayer,
  kBusinessOperation,
  kCompOblig,
  kRule,
  kWhen,
  kMatches,
  kThen,
  kElse,
  kEnd,
  kIf,
  kEndIf,
  kIn,
  kReset,
  // punctuation
  kComma,
  kSemicolon,
  kDot,
  kLParen,
  kRParen,
  kEqEq,
  kPlusEq,
  kMinusEq,
  kBang,
  kLess,
  kGreater,
  kLessEq,
  kGreaterEq,
  kLBracket,
  kRBracket,
  // literals
  kString,
  kInt,
  kIdent,
  kEof,
};

/// Human readable spelling used in diagnostics ("'then'", "identifier").
inline std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::kRolePlayer: return "'roleplayer'";
    case TokenKind::kBusinessOperation: return "'businessoperation'";
    case TokenKind::kCompOblig: return "'compoblig'";
    case TokenKind::kRule: return "'rule'";
    case TokenKind::kWhen: return "'when'";
    case TokenKind::kMatches: return "'matches'";
    case TokenKind::kThen: return "'then'";
    case TokenKind::kElse: return "'else'";
    case TokenKind::kEnd: return "'end'";
    case TokenKind::kIf: return "'if'";
    case TokenKind::kEndIf: return "'endif'";
    case TokenKind::kIn: return "'in'";
    case TokenKind::kReset: return "'reset'";
    case TokenKind::kComma: return "','";
    case TokenKind::kSemicolon: return "';'";
    case TokenKind::kDot: return "'.'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kEqEq: return "'=='";
    case TokenKind::kPlusEq: return "'+='";
    case TokenKind::kMinusEq: return "'-='";
    case TokenKind::kBang: return "'!'";
    case TokenKind::kLess: return "'<'";
    case TokenKind::kGreater: return "'>'";
    case TokenKind::kLessEq: return "'<='";
    case TokenKind::kGreaterEq: return "'>='";
    case TokenKind::kLBracket: return "'['";
    case TokenKind::kRBracket: return "']'";
    case TokenKind::kString: return "string literal";
    case TokenKind::kInt: return "integer literal";
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kEof: return "end of file";
  }
  return "?";
}

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string lexeme;  // empty only for kEof
  SourcePos pos;

  /// Contents of a string literal without the surrounding quotes.
  std::string_view string_value() const {
    return std::string_view(lexeme).substr(1, lexeme.size() - 2);
  }

  friend bool operator==(const Token&, const Token&) = default;
};

namespace detail {

inline constexpr std::array<std::pair<std::string_view, TokenKind>, 13>
    kKeywords = {{
        {"roleplayer", TokenKind::kRolePlayer},
        {"businessoperation", TokenKind::kBusinessOperation},
        {"compoblig", TokenKind::kCompOblig},
        {"rule", TokenKind::kRule},
        {"when", TokenKind::kWhen},
        {"matches", TokenKind::kMatches},
        {"then", TokenKind::kThen},
        {"else", TokenKind::kElse},
        {"end", TokenKind::kEnd},
        {"if", TokenKind::kIf},
        {"endif", TokenKind::kEndIf},
        {"in", TokenKind::kIn},
        {"reset", TokenKind::kReset},
    }};

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (at_end()) break;
      out.push_back(next_token());
    }
    out.push_back(Token{TokenKind::kEof, {}, pos_});
    return out;
  }

 private:
  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    std::size_t i = pos_.offset + ahead;
    return i < src_.size() ? src_[i] : '\0';
  }

  // Advances one byte, keeping line/col in step. "\r\n", "\r" and "\n"
  // each count as a single line break.
  void advance() {
    char c = src_[pos_.offset++];
    if (c == '\n' || (c == '\r' && peek() != '\n')) {
      ++pos_.line;
      pos_.col = 1;
    } else if (c == '\r') {
      // first half of CRLF; the '\n' ends the line
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // count only code-point lead bytes
      ++pos_.col;
    }
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
          c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n' && peek() != '\r') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourcePos start = pos_;
        advance();
        advance();
        for (;;) {
          if (at_end()) {
            throw LexError(make_error(codes::kLexical,
                                      "unterminated block comment", start));
          }
          if (peek() == '*' && peek(1) == '/') {
            advance();
            advance();
            break;
          }
          advance();
        }
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, SourcePos start) const {
    return Token{kind,
                 std::string(src_.substr(start.offset,
                                         pos_.offset - start.offset)),
                 start};
  }

  Token punct(TokenKind kind, SourcePos start, int width) {
    for (int i = 0; i < width; ++i) advance();
    return make(kind, start);
  }

  Token next_token() {
    SourcePos start = pos_;
    char c = peek();

    if (is_ident_start(c)) {
      while (!at_end() && is_ident_char(peek())) advance();
      Token t = make(TokenKind::kIdent, start);
      for (const auto& [word, kind] : kKeywords) {
        if (t.lexeme == word) {
          t.kind = kind;
          break;
        }
      }
      return t;
    }
    if (is_digit(c)) {
      while (!at_end() && is_digit(peek())) advance();
      return make(TokenKind::kInt, start);
    }
    if (c == '"') {
      advance();
      while (!at_end() && peek() != '"' && peek() != '\n' && peek() != '\r') {
        advance();
      }
      if (at_end() || peek() != '"') {
        throw LexError(
            make_error(codes::kLexical, "unterminated string literal", start));
      }
      advance();
      return make(TokenKind::kString, start);
    }

    char n = peek(1);
    switch (c) {
      case ',': return punct(TokenKind::kComma, start, 1);
      case ';': return punct(TokenKind::kSemicolon, start, 1);
      case '.': return punct(TokenKind::kDot, start, 1);
      case '(': return punct(TokenKind::kLParen, start, 1);
      case ')': return punct(TokenKind::kRParen, start, 1);
      case '[': return punct(TokenKind::kLBracket, start, 1);
      case ']': return punct(TokenKind::kRBracket, start, 1);
      case '!': return punct(TokenKind::kBang, start, 1);
      case '=':
        if (n == '=') return punct(TokenKind::kEqEq, start, 2);
        break;
      case '+':
        if (n == '=') return punct(TokenKind::kPlusEq, start, 2);
        break;
      case '-':
        if (n == '=') return punct(TokenKind::kMinusEq, start, 2);
        break;
      case '<':
        return n == '=' ? punct(TokenKind::kLessEq, start, 2)
                        : punct(TokenKind::kLess, start, 1);
      case '>':
        return n == '=' ? punct(TokenKind::kGreaterEq, start, 2)
                        : punct(TokenKind::kGreater, start, 1);
      default:
        break;
    }

    std::string shown;
    if (static_cast<unsigned char>(c) >= 0x20 &&
        static_cast<unsigned char>(c) < 0x7F) {
      shown = std::string("'") + c + "'";
    } else {
      static constexpr char kHex[] = "0123456789ABCDEF";
      unsigned char u = static_cast<unsigned char>(c);
      shown = std::string("byte 0x") + kHex[u >> 4] + kHex[u & 0xF];
    }
    throw LexError(
        make_error(codes::kLexical, "illegal character " + shown, start));
  }

  std::string_view src_;
  SourcePos pos_;
};

}  // namespace detail

/// Splits EROP source into tokens terminated by a single kEof token.
/// Whitespace and `//` / `/* */` comments are skipped. Throws LexError.
inline std::vector<Token> tokenize(std::string_view source) {
  return detail::Lexer(source).run();
}

}  // namespace erop

#endif  // EROP_LEXER_HPP_
