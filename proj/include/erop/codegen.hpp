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

#ifndef EROP_CODEGEN_HPP_
#define EROP_CODEGEN_HPP_

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "erop/ir.hpp"
#include "erop/lookup.hpp"
#include "erop/symbols.hpp"

namespace erop {

// ---------------------------------------------------------------------------
// Target document
// ---------------------------------------------------------------------------

struct ADRule {
  std::string name;
  std::vector<std::string> when_lines;  // [0] is the event pattern
  std::vector<std::string> then_lines;
  friend bool operator==(const ADRule&, const ADRule&) = default;
};

struct ADGlobal {
  std::string type;
  std::string name;
  friend bool operator==(const ADGlobal&, const ADGlobal&) = default;
};

struct ADFile {
  std::string package_name;
  std::vector<std::string> imports;
  std::vector<ADGlobal> globals;
  std::vector<ADRule> rules;
  friend bool operator==(const ADFile&, const ADFile&) = default;
};

inline constexpr std::string_view kIndent = "    ";

// ---------------------------------------------------------------------------
// Naming
// ---------------------------------------------------------------------------

/// `BuyRequest` -> `buyRequest`
inline std::string bo_global_name(std::string_view name) {
  std::string out(name);
  if (!out.empty()) {
    out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  }
  return out;
}

/// `buyer` -> `ropBuyer`
inline std::string rop_var_name(std::string_view player) {
  std::string out = "rop";
  out.append(player);
  if (out.size() > 3) {
    out[3] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[3])));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conditional splitting
// ---------------------------------------------------------------------------

/// Splits a rule whose sole action is an if statement into an `<name>IfThen`
/// rule (if-condition prepended to the constraints) and, when there is an
/// else branch, an `<name>IfElse` rule guarded by the negated condition.
/// Rules without an if statement are returned unchanged.
inline std::vector<ir::Rule> split_conditional_rule(const ir::Rule& rule) {
  const ir::IfStatement* branch = nullptr;
  for (const auto& a : rule.actions) {
    if (const auto* s = std::get_if<ir::IfStatement>(&a.node)) {
      if (branch || rule.actions.size() != 1) {
        throw ir::InternalError("rule '" + rule.name +
                                "' mixes an if statement with other actions");
      }
      branch = s;
    }
  }
  if (!branch) return {rule};

  std::vector<ir::Rule> out;
  ir::Rule then_rule;
  then_rule.name = rule.name + "IfThen";
  then_rule.event = rule.event;
  then_rule.constraints = branch->cond;
  then_rule.constraints.insert(then_rule.constraints.end(),
                               rule.constraints.begin(), rule.constraints.end());
  then_rule.actions = branch->then_actions;
  out.push_back(std::move(then_rule));

  if (branch->else_actions) {
    ir::Rule else_rule;
    else_rule.name = rule.name + "IfElse";
    else_rule.event = rule.event;
    else_rule.constraints.push_back({ir::NegatedConjunction{branch->cond}});
    else_rule.constraints.insert(else_rule.constraints.end(),
                                 rule.constraints.begin(),
                                 rule.constraints.end());
    else_rule.actions = *branch->else_actions;
    out.push_back(std::move(else_rule));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

inline ADFile make_file_header(const SymbolTable& table,
                               std::string package_name) {
  ADFile f;
  f.package_name = std::move(package_name);
  f.imports = {"uk.ac.ncl.erop.*", "uk.ac.ncl.logging.CCCLogger"};
  f.globals.push_back({"RelevanceEngine", "engine"});
  f.globals.push_back({"EventLogger", "logger"});
  for (const auto& p : table.role_players()) {
    f.globals.push_back({"RolePlayer", p});
    f.globals.push_back({"ROPSet", rop_var_name(p)});
  }
  for (const auto& b : table.business_ops()) {
    f.globals.push_back({"BusinessOperation", bo_global_name(b)});
  }
  return f;
}

inline std::string render_header(const ADFile& f) {
  std::string out = "package " + f.package_name + "\n\n";
  for (const auto& i : f.imports) out += "import " + i + ";\n";
  out += '\n';
  for (const auto& g : f.globals) out += "global " + g.type + ' ' + g.name + ";\n";
  return out;
}

/// Package line, imports and globals, ending with the last global's newline.
inline std::string emit_declarations(const SymbolTable& table,
                                     const std::string& package_name) {
  return render_header(make_file_header(table, package_name));
}

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view set_singular(RopSet s) {
  switch (s) {
    case RopSet::kRights: return "right";
    case RopSet::kObligs: return "oblig";
    case RopSet::kProhibs: return "prohib";
  }
  return "?";
}

inline std::string quote(std::string_view s) {
  return "\"" + std::string(s) + "\"";
}

class RuleEmitter {
 public:
  RuleEmitter(const LookupTable& lookup, const SymbolTable& table)
      : lookup_(lookup), table_(table) {}

  ADRule emit(const ir::Rule& r) {
    ADRule out;
    out.name = r.name;
    const auto& e = r.event;
    out.when_lines.push_back("$e: Event(type==" + quote(e.botype) +
                             ", originator==" + quote(e.originator) +
                             ", responder==" + quote(e.responder) +
                             ", status==" + quote(e.outcome) + ")");
    for (const auto& c : r.constraints) {
      out.when_lines.push_back("eval(" + expr(c) + ")");
    }
    int arrays = 0;
    for (const auto& a : r.actions) emit_action(a, out.then_lines, arrays);
    return out;
  }

  /// Boolean expression of one constraint, without the eval() wrapper.
  std::string expr(const ir::Constraint& c) const {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ir::RopConstraint>) {
            return rop_var_name(n.player) + "." +
                   method("rop.matches." + std::string(to_string(n.set))) + "(" +
                   bo_global_name(n.bo) + ")";
          } else if constexpr (std::is_same_v<T, ir::OutcomeConstraint>) {
            return bo_global_name(n.bo) + "." + method("bizfail.get") +
                   "() == " + (n.expected ? "true" : "false");
          } else if constexpr (std::is_same_v<T, ir::TimeDirectComparison>) {
            return "$e." + method("time.stamp") + "() " +
                   std::string(to_string(n.op)) + " " + quote(n.timestamp);
          } else if constexpr (std::is_same_v<T, ir::TimePartialComparison>) {
            std::string getter =
                "$e." + method("time." + std::string(to_string(n.unit))) + "()";
            return getter + " >= " + std::to_string(n.lo) + " && " + getter +
                   " <= " + std::to_string(n.hi);
          } else if constexpr (std::is_same_v<T, ir::HistoricalConstraint>) {
            std::string call =
                "engine." + method("historical.happened") + "(";
            for (std::size_t i = 0; i < n.fields.size(); ++i) {
              if (i) call += ", ";
              call += n.fields[i] ? quote(*n.fields[i]) : "null";
            }
            call += ")";
            return n.happened ? call : "!" + call;
          } else {
            std::string inner;
            for (std::size_t i = 0; i < n.terms.size(); ++i) {
              if (i) inner += " && ";
              inner += expr(n.terms[i]);
            }
            return "!(" + inner + ")";
          }
        },
        c.node);
  }

 private:
  const std::string& method(const std::string& key) const {
    return lookup_.resolve(key);
  }

  void emit_action(const ir::Action& a, std::vector<std::string>& lines,
                   int& arrays) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ir::AddOrRemAction>) {
            emit_manip(n, lines, arrays);
          } else if constexpr (std::is_same_v<T, ir::OutcomeSet>) {
            lines.push_back(bo_global_name(n.bo) + "." + method("bizfail.set") +
                            "(" + (n.value ? "true" : "false") + ");");
          } else if constexpr (std::is_same_v<T, ir::ResetAction>) {
            lines.push_back(rop_var_name(n.player) + "." + method("reset") + "();");
          } else {
            throw ir::InternalError("if statement reached emission unsplit");
          }
        },
        a.node);
  }

  void emit_manip(const ir::AddOrRemAction& m, std::vector<std::string>& lines,
                  int& arrays) {
    std::string key = std::string("rop.") +
                      (m.op == ManipOp::kAdd ? "add." : "remove.") +
                      std::string(set_singular(m.set));
    std::string call = rop_var_name(m.player) + "." + method(key) + "(";
    const auto* co = table_.find_comp_oblig(m.bo);
    if (co && m.op == ManipOp::kAdd) {
      ++arrays;
      std::string arr = arrays == 1 ? "bos" : "bos" + std::to_string(arrays);
      std::string decl = "BusinessOperation[] " + arr + " = {";
      for (std::size_t i = 0; i < co->members.size(); ++i) {
        if (i) decl += ", ";
        decl += bo_global_name(co->members[i]);
      }
      lines.push_back(decl + "};");
      call += quote(m.bo) + ", " + arr + ", " + m.beneficiary;
      if (m.deadline) call += ", " + quote(*m.deadline);
    } else if (co) {
      call += quote(m.bo) + ", " + m.beneficiary;
    } else {
      call += bo_global_name(m.bo) + ", " + m.beneficiary;
      if (m.deadline) call += ", " + quote(*m.deadline);
    }
    lines.push_back(call + ");");
  }

  const LookupTable& lookup_;
  const SymbolTable& table_;
};

}  // namespace detail

/// Emits one post-split rule. Throws MissingLookupKey when the lookup table
/// lacks a method the rule needs.
inline ADRule emit_rule(const ir::Rule& rule, const LookupTable& lookup,
                        const SymbolTable& table) {
  return detail::RuleEmitter(lookup, table).emit(rule);
}

/// Expression text of a single constraint (the part inside `eval(...)`).
inline std::string constraint_expr(const ir::Constraint& c,
                                   const LookupTable& lookup,
                                   const SymbolTable& table) {
  return detail::RuleEmitter(lookup, table).expr(c);
}

inline std::string render_rule(const ADRule& r) {
  std::string out = "rule \"" + r.name + "\"\nwhen\n";
  for (const auto& l : r.when_lines) {
    out.append(kIndent);
    out += l;
    out += '\n';
  }
  out += "then\n";
  for (const auto& l : r.then_lines) {
    out.append(kIndent);
    out += l;
    out += '\n';
  }
  out += "end\n";
  return out;
}

/// Byte-exact rendering: LF newlines, 4-space indentation, one blank line
/// before each rule.
inline std::string render(const ADFile& f) {
  std::string out = render_header(f);
  for (const auto& r : f.rules) {
    out += '\n';
    out += render_rule(r);
  }
  return out;
}

/// Splits and emits every rule of a lowered contract.
inline ADFile emit_contract(const ir::Contract& contract,
                            const LookupTable& lookup) {
  ADFile f = make_file_header(contract.symbols, contract.package_name);
  for (const auto& r : contract.rules) {
    for (const auto& part : split_conditional_rule(r)) {
      f.rules.push_back(emit_rule(part, lookup, contract.symbols));
    }
  }
  return f;
}

}  // namespace erop

#endif  // EROP_CODEGEN_HPP_
