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

#ifndef EROP_SOURCE_HPP_
#define EROP_SOURCE_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace erop {

/// Location of a character in a source file. Lines and columns are 1-based,
/// columns count characters (UTF-8 code points), offset counts bytes.
struct SourcePos {
  int line = 1;
  int col = 1;
  std::size_t offset = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class Severity { kError, kWarning };

inline std::string_view severity_name(Severity s) {
  return s == Severity::kError ? "error" : "warning";
}

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;  // "E001".."E999" or "W001".."W999"
  std::string message;
  SourcePos pos;

  bool is_error() const { return severity == Severity::kError; }

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline Diagnostic make_error(std::string code, std::string message,
                             SourcePos pos) {
  return {Severity::kError, std::move(code), std::move(message), pos};
}

inline Diagnostic make_warning(std::string code, std::string message,
                               SourcePos pos) {
  return {Severity::kWarning, std::move(code), std::move(message), pos};
}

/// `<file>:<line>:<col>: <severity>[<code>]: <message>`
inline std::string render_diagnostic(const Diagnostic& d,
                                     std::string_view file) {
  std::string out;
  out.append(file);
  out += ':';
  out += std::to_string(d.pos.line);
  out += ':';
  out += std::to_string(d.pos.col);
  out += ": ";
  out.append(severity_name(d.severity));
  out += '[';
  out += d.code;
  out += "]: ";
  out += d.message;
  return out;
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

/// Orders diagnostics by (line, col); ties keep their emission order.
inline void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.pos.line != b.pos.line) return a.pos.line < b.pos.line;
                     return a.pos.col < b.pos.col;
                   });
}

// Diagnostic codes shared between passes.
namespace codes {
inline constexpr const char* kDuplicateDecl = "E001";
inline constexpr const char* kUnknownMember = "E002";
inline constexpr const char* kBadCasing = "E003";
inline constexpr const char* kUndeclared = "E004";
inline constexpr const char* kNotRolePlayer = "E005";
inline constexpr const char* kBadEventMatch = "E006";
inline constexpr const char* kDuplicateRule = "E007";
inline constexpr const char* kBadOutcome = "E008";
inline constexpr const char* kBadArguments = "E009";
inline constexpr const char* kIfWithSiblings = "E010";
inline constexpr const char* kMissingLookup = "E011";
inline constexpr const char* kCompObligSet = "E012";
inline constexpr const char* kBadTimeConstraint = "E013";
inline constexpr const char* kBadHistoricalField = "E014";
inline constexpr const char* kLexical = "E100";
inline constexpr const char* kSyntax = "E101";
inline constexpr const char* kUnused = "W001";
inline constexpr const char* kOutcomeValue = "W002";
inline constexpr const char* kNoRules = "W003";
}  // namespace codes

/// Thrown by the front end on the first lexical or syntax error.
class CompileError : public std::runtime_error {
 public:
  explicit CompileError(Diagnostic diag)
      : std::runtime_error(diag.message), diag_(std::move(diag)) {}

  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

class LexError : public CompileError {
 public:
  using CompileError::CompileError;
};

class ParseError : public CompileError {
 public:
  using CompileError::CompileError;
};

}  // namespace erop

#endif  // EROP_SOURCE_HPP_
