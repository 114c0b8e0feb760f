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

#ifndef EROP_TRANSLATE_HPP_
#define EROP_TRANSLATE_HPP_

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erop/ast.hpp"
#include "erop/codegen.hpp"
#include "erop/ir.hpp"
#include "erop/lexer.hpp"
#include "erop/lookup.hpp"
#include "erop/parser.hpp"
#include "erop/sema.hpp"
#include "erop/source.hpp"

namespace erop {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a whole file as bytes. Throws IoError.
inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ss.str();
}

/// Loads a lookup file, or the defaults when no path is given.
/// Throws IoError or ConfigError.
inline LookupTable load_lookup_file(
    const std::optional<std::filesystem::path>& path) {
  if (!path) return LookupTable::defaults();
  return load_lookup(read_file(*path));
}

/// Everything the front end learned about a source file.
struct Analysis {
  std::optional<ast::Contract> contract;  // absent after a lex/parse error
  SymbolTable symbols;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return contract.has_value() && !has_errors(diagnostics); }
};

/// tokenize -> parse -> build symbol table -> check.
inline Analysis analyze_source(std::string_view source) {
  Analysis a;
  try {
    a.contract = parse_source(source);
  } catch (const CompileError& e) {
    a.diagnostics.push_back(e.diagnostic());
    return a;
  }
  a.diagnostics = analyze(*a.contract, a.symbols);
  return a;
}

struct TranslateOptions {
  std::string package_name;
  std::optional<std::filesystem::path> lookup_path;
};

struct TranslateResult {
  std::optional<std::string> output;
  std::vector<Diagnostic> diagnostics;  // warnings survive a successful run

  bool ok() const { return output.has_value(); }
};

/// Emits the rule file for an analysed, error-free contract.
inline TranslateResult emit(const Analysis& a, const std::string& package_name,
                            const LookupTable& lookup) {
  TranslateResult r;
  r.diagnostics = a.diagnostics;
  if (!a.ok()) return r;

  ir::Contract lowered = ir::lower_contract(*a.contract, a.symbols, package_name);
  ADFile file = make_file_header(lowered.symbols, lowered.package_name);
  for (std::size_t i = 0; i < lowered.rules.size(); ++i) {
    try {
      for (const auto& part : split_conditional_rule(lowered.rules[i])) {
        file.rules.push_back(emit_rule(part, lookup, lowered.symbols));
      }
    } catch (const MissingLookupKey& e) {
      r.diagnostics.push_back(make_error(
          codes::kMissingLookup,
          "no lookup entry for key '" + e.key() + "' needed by rule '" +
              lowered.rules[i].name + "'",
          a.contract->rules[i].pos));
      sort_diagnostics(r.diagnostics);
      return r;
    }
  }
  r.output = render(file);
  return r;
}

/// Full pipeline with an in-memory lookup table. Never throws on bad input:
/// every problem is a diagnostic.
inline TranslateResult compile(std::string_view source,
                               const std::string& package_name,
                               const LookupTable& lookup) {
  return emit(analyze_source(source), package_name, lookup);
}

/// Full pipeline; the lookup file, if any, is read from disk. Throws
/// IoError/ConfigError for an unreadable or malformed lookup file.
inline TranslateResult translate(std::string_view source,
                                 const TranslateOptions& options) {
  return compile(source, options.package_name,
                 load_lookup_file(options.lookup_path));
}

}  // namespace erop

#endif  // EROP_TRANSLATE_HPP_
