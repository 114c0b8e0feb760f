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

#ifndef EROP_CLI_HPP_
#define EROP_CLI_HPP_

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "erop/translate.hpp"

namespace erop::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Mode { kCompile, kCheck, kEmitAst, kEmitIr };

enum ExitCode : int { kOk = 0, kDiagnostics = 1, kUsage = 2 };

struct Options {
  std::filesystem::path input;
  std::optional<std::filesystem::path> output;  // "-" means standard output
  std::string package_name;
  std::optional<std::filesystem::path> lookup;
  Mode mode = Mode::kCompile;
};

/// Turns a file stem into a package identifier: characters outside
/// [A-Za-z0-9_] become '_', a leading digit gets a '_' prefix.
inline std::string sanitize_package_name(std::string_view stem) {
  std::string out;
  for (char c : stem) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    out += ok ? c : '_';
  }
  if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out.insert(0, "_");
  return out;
}

/// Writes `text` to `path` via a sibling temporary file and a rename, so the
/// destination is either untouched or complete. Throws IoError.
inline void write_file_atomically(const std::filesystem::path& path,
                                  const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("cannot write " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot write " + path.string());
  }
}

inline void print_diagnostics(const std::vector<Diagnostic>& diags,
                              const std::string& file, std::ostream& err) {
  for (const auto& d : diags) err << render_diagnostic(d, file) << '\n';
}

/// Runs the compiler driver. `args[0]` is the program name.
/// Exit codes: 0 success, 1 error diagnostics, 2 usage/IO/config failure.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Compiles EROP contracts into Augmented Drools rule files",
               "eropc"};
  Options opt;
  std::string input, output, lookup;
  bool check = false, emit_ast = false, emit_ir = false;

  app.add_option("input", input, "EROP contract (.erop)")->required();
  app.add_option("-o,--output", output,
                 "Output file (default: input with .drl extension; '-' for "
                 "standard output)");
  app.add_option("--package", opt.package_name,
                 "Package name (default: input file stem)");
  app.add_option("--lookup", lookup, "Method lookup file (key = value lines)");
  auto* f_check = app.add_flag("--check", check, "Only report diagnostics");
  auto* f_ast = app.add_flag("--emit-ast", emit_ast, "Print the parse tree");
  auto* f_ir = app.add_flag("--emit-ir", emit_ir,
                            "Print the intermediate representation");
  f_check->excludes(f_ast)->excludes(f_ir);
  f_ast->excludes(f_ir);
  app.set_version_flag("--version", std::string("eropc ") + kVersion);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  opt.input = input;
  if (!output.empty()) opt.output = output;
  if (!lookup.empty()) opt.lookup = lookup;
  if (check) opt.mode = Mode::kCheck;
  if (emit_ast) opt.mode = Mode::kEmitAst;
  if (emit_ir) opt.mode = Mode::kEmitIr;
  if (opt.package_name.empty()) {
    opt.package_name = sanitize_package_name(opt.input.stem().string());
  }
  const std::string file = opt.input.string();

  std::string source;
  LookupTable table;
  try {
    source = read_file(opt.input);
    table = load_lookup_file(opt.lookup);
  } catch (const IoError& e) {
    err << "eropc: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "eropc: " << opt.lookup->string() << ':' << e.line() << ": "
        << e.what() << '\n';
    return kUsage;
  }

  if (opt.mode == Mode::kEmitAst) {
    try {
      out << ast::dump(parse_source(source));
    } catch (const CompileError& e) {
      print_diagnostics({e.diagnostic()}, file, err);
      return kDiagnostics;
    }
    return kOk;
  }

  Analysis analysis = analyze_source(source);
  if (opt.mode == Mode::kCheck) {
    print_diagnostics(analysis.diagnostics, file, err);
    return analysis.ok() ? kOk : kDiagnostics;
  }
  if (opt.mode == Mode::kEmitIr) {
    print_diagnostics(analysis.diagnostics, file, err);
    if (!analysis.ok()) return kDiagnostics;
    out << ir::dump(
        ir::lower_contract(*analysis.contract, analysis.symbols, opt.package_name));
    return kOk;
  }

  TranslateResult result = emit(analysis, opt.package_name, table);
  print_diagnostics(result.diagnostics, file, err);
  if (!result.ok()) return kDiagnostics;

  std::filesystem::path dest =
      opt.output ? *opt.output
                 : std::filesystem::path(opt.input).replace_extension(".drl");
  if (dest == "-") {
    out << *result.output;
    return kOk;
  }
  try {
    write_file_atomically(dest, *result.output);
  } catch (const IoError& e) {
    err << "eropc: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace erop::cli

#endif  // EROP_CLI_HPP_
