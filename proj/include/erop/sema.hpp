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

#ifndef EROP_SEMA_HPP_
#define EROP_SEMA_HPP_

#include <array>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "erop/ast.hpp"
#include "erop/source.hpp"
#include "erop/symbols.hpp"

namespace erop {

/// Canonical event-match field names, in emission order.
inline constexpr std::array<std::string_view, 4> kEventFieldNames = {
    "botype", "originator", "responder", "outcome"};

inline int event_field_index(std::string_view name) {
  for (std::size_t i = 0; i < kEventFieldNames.size(); ++i) {
    if (kEventFieldNames[i] == name) return static_cast<int>(i);
  }
  return -1;
}

inline std::string quote_name(std::string_view s) {
  return "'" + std::string(s) + "'";
}

struct SymbolTableResult {
  SymbolTable table;
  std::vector<Diagnostic> diagnostics;
};

/// Collects declared names. A name declared twice (in any name space) keeps
/// its first declaration and reports E001; compoblig members that are not
/// business operations are dropped and reported as E002.
inline SymbolTableResult build_symbol_table(const ast::Contract& contract) {
  SymbolTableResult out;
  std::vector<std::pair<std::string, SymbolKind>> seen;
  auto first_kind = [&](std::string_view n) {
    for (const auto& [name, kind] : seen) {
      if (name == n) return kind;
    }
    return SymbolKind::kNone;
  };
  auto declare = [&](const ast::Ident& id, SymbolKind kind) {
    SymbolKind prior = first_kind(id.text);
    if (prior != SymbolKind::kNone) {
      out.diagnostics.push_back(make_error(
          codes::kDuplicateDecl,
          "duplicate declaration of " + quote_name(id.text) + " (already declared as " +
              std::string(describe(prior)) + ")",
          id.pos));
      return false;
    }
    seen.emplace_back(id.text, kind);
    return true;
  };

  std::vector<std::string> players, ops;
  std::vector<const ast::CompOblig*> obligs;
  for (const auto& decl : contract.decls) {
    if (const auto* rp = std::get_if<ast::RolePlayers>(&decl)) {
      for (const auto& n : rp->names) {
        if (declare(n, SymbolKind::kRolePlayer)) players.push_back(n.text);
      }
    } else if (const auto* bo = std::get_if<ast::BusinessOps>(&decl)) {
      for (const auto& n : bo->names) {
        if (declare(n, SymbolKind::kBusinessOp)) ops.push_back(n.text);
      }
    } else {
      const auto& co = std::get<ast::CompOblig>(decl);
      if (declare(co.name, SymbolKind::kCompOblig)) obligs.push_back(&co);
    }
  }

  for (auto& p : players) out.table.add_role_player(std::move(p));
  for (auto& o : ops) out.table.add_business_op(std::move(o));
  for (const ast::CompOblig* co : obligs) {
    std::vector<std::string> members;
    for (const auto& m : co->members) {
      if (!out.table.is_business_op(m.text)) {
        out.diagnostics.push_back(make_error(
            codes::kUnknownMember,
            "composite obligation " + quote_name(co->name.text) +
                " lists unknown business operation " + quote_name(m.text),
            m.pos));
      } else if (std::find(members.begin(), members.end(), m.text) !=
                 members.end()) {
        out.diagnostics.push_back(make_error(
            codes::kDuplicateDecl,
            "duplicate member " + quote_name(m.text) + " in composite obligation " +
                quote_name(co->name.text),
            m.pos));
      } else {
        members.push_back(m.text);
      }
    }
    out.table.add_comp_oblig(co->name.text, std::move(members));
  }
  sort_diagnostics(out.diagnostics);
  return out;
}

namespace detail {

class Checker {
 public:
  Checker(const ast::Contract& c, const SymbolTable& tab) : c_(c), tab_(tab) {}

  std::vector<Diagnostic> run() {
    check_casing();
    std::set<std::string> rule_names;
    for (const auto& r : c_.rules) {
      if (!rule_names.insert(r.name.text).second) {
        error(codes::kDuplicateRule, "duplicate rule name " + quote_name(r.name.text),
              r.name.pos);
      }
      check_rule(r);
    }
    for (const auto& co : tab_.comp_obligs()) {
      for (const auto& m : co.members) used_.insert(m);
    }
    check_unused();
    if (c_.rules.empty() && !c_.decls.empty()) {
      diags_.push_back(make_warning(codes::kNoRules, "contract declares no rules",
                                    decl_pos(c_.decls.front())));
    }
    sort_diagnostics(diags_);
    return std::move(diags_);
  }

 private:
  static SourcePos decl_pos(const ast::Decl& d) {
    return std::visit([](const auto& n) { return n.pos; }, d);
  }

  void error(const char* code, std::string msg, SourcePos pos) {
    diags_.push_back(make_error(code, std::move(msg), pos));
  }

  static bool starts_upper(std::string_view s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
  }
  static bool starts_lower(std::string_view s) {
    return !s.empty() && std::islower(static_cast<unsigned char>(s[0]));
  }

  void check_casing() {
    for (const auto& decl : c_.decls) {
      if (const auto* rp = std::get_if<ast::RolePlayers>(&decl)) {
        for (const auto& n : rp->names) {
          if (!starts_lower(n.text)) {
            error(codes::kBadCasing,
                  "role player " + quote_name(n.text) +
                      " must begin with a lower-case letter",
                  n.pos);
          }
        }
      } else if (const auto* bo = std::get_if<ast::BusinessOps>(&decl)) {
        for (const auto& n : bo->names) {
          if (!starts_upper(n.text)) {
            error(codes::kBadCasing,
                  "business operation " + quote_name(n.text) +
                      " must begin with an upper-case letter",
                  n.pos);
          }
        }
      } else {
        const auto& co = std::get<ast::CompOblig>(decl);
        if (!starts_upper(co.name.text)) {
          error(codes::kBadCasing,
                "composite obligation " + quote_name(co.name.text) +
                    " must begin with an upper-case letter",
                co.name.pos);
        }
      }
    }
  }

  void check_unused() {
    for (const auto& decl : c_.decls) {
      auto report = [&](const ast::Ident& n, SymbolKind kind) {
        // only the surviving (first) declaration is reported
        if (tab_.kind_of(n.text) != kind || used_.count(n.text)) return;
        if (!reported_unused_.insert(n.text).second) return;
        diags_.push_back(make_warning(
            codes::kUnused,
            std::string(describe(kind)) + " " + quote_name(n.text) +
                " declared but never used",
            n.pos));
      };
      if (const auto* rp = std::get_if<ast::RolePlayers>(&decl)) {
        for (const auto& n : rp->names) report(n, SymbolKind::kRolePlayer);
      } else if (const auto* bo = std::get_if<ast::BusinessOps>(&decl)) {
        for (const auto& n : bo->names) report(n, SymbolKind::kBusinessOp);
      } else {
        report(std::get<ast::CompOblig>(decl).name, SymbolKind::kCompOblig);
      }
    }
  }

  // Role-player slot of a ROP access or reset.
  void check_player(const ast::Ident& id) {
    used_.insert(id.text);
    if (!tab_.is_role_player(id.text)) {
      error(codes::kNotRolePlayer,
            quote_name(id.text) + " is not a declared role player", id.pos);
    }
  }

  // Counterparty names: event originator/responder, beneficiaries.
  void check_party(const ast::Ident& id) {
    used_.insert(id.text);
    SymbolKind k = tab_.kind_of(id.text);
    if (k == SymbolKind::kNone) {
      error(codes::kUndeclared, "undeclared role player " + quote_name(id.text),
            id.pos);
    } else if (k != SymbolKind::kRolePlayer) {
      error(codes::kNotRolePlayer,
            quote_name(id.text) + " is a " + std::string(describe(k)) +
                ", not a role player",
            id.pos);
    }
  }

  void check_operation(const ast::Ident& id) {
    used_.insert(id.text);
    SymbolKind k = tab_.kind_of(id.text);
    if (k == SymbolKind::kNone) {
      error(codes::kUndeclared,
            "undeclared business operation " + quote_name(id.text), id.pos);
    } else if (k == SymbolKind::kRolePlayer) {
      error(codes::kUndeclared,
            quote_name(id.text) +
                " is a role player, not a business operation or composite "
                "obligation",
            id.pos);
    }
  }

  void check_comp_oblig_set(const ast::Ident& bo, RopSet set) {
    if (tab_.is_comp_oblig(bo.text) && set != RopSet::kObligs) {
      error(codes::kCompObligSet,
            "composite obligation " + quote_name(bo.text) +
                " can only be held in an obligs set",
            bo.pos);
    }
  }

  void check_outcome(const ast::Ident& bo, const ast::Ident& value) {
    used_.insert(bo.text);
    if (!tab_.is_operation(bo.text)) {
      error(codes::kBadOutcome,
            quote_name(bo.text) +
                " is not a declared business operation or composite obligation",
            bo.pos);
    }
    if (value.text != "true" && value.text != "false") {
      error(codes::kBadOutcome,
            "BizFail value must be 'true' or 'false', found " + quote_name(value.text),
            value.pos);
    }
  }

  static bool outcome_value_known(std::string_view v) {
    std::string lower;
    for (char ch : v) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return lower == "success" || lower == "tecfail" || lower == "bizfail";
  }

  void check_event_match(const ast::Rule& r) {
    std::array<int, 4> count{};
    bool well_formed = r.event_fields.size() == kEventFieldNames.size();
    for (const auto& f : r.event_fields) {
      int i = event_field_index(f.name.text);
      if (i < 0) {
        well_formed = false;
        continue;
      }
      if (++count[static_cast<std::size_t>(i)] > 1) well_formed = false;
      if (i == 1 || i == 2) check_party(f.value);
      if (i == 3 && !outcome_value_known(f.value.text)) {
        diags_.push_back(make_warning(
            codes::kOutcomeValue,
            "unrecognised outcome value " + quote_name(f.value.text) +
                " (expected success, tecFail or bizFail)",
            f.value.pos));
      }
    }
    if (!well_formed) {
      error(codes::kBadEventMatch,
            "event match must specify botype, originator, responder and "
            "outcome exactly once",
            r.event_var.pos);
    }
  }

  static bool unit_in_range(TimeUnit u, long v) {
    switch (u) {
      case TimeUnit::kHour: return v >= 0 && v <= 23;
      case TimeUnit::kMinute: return v >= 0 && v <= 59;
      case TimeUnit::kDay: return v >= 1 && v <= 31;
      case TimeUnit::kMonth: return v >= 1 && v <= 12;
      case TimeUnit::kYear: return true;
    }
    return false;
  }

  void check_event_var(const ast::Ident& var, const ast::Rule& r) {
    if (var.text != r.event_var.text) {
      error(codes::kBadTimeConstraint,
            quote_name(var.text) + " is not the event variable of rule " +
                quote_name(r.name.text),
            var.pos);
    }
  }

  void check_constraint(const ast::Constraint& c, const ast::Rule& r) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ast::RopMembership>) {
            check_operation(n.bo);
            check_player(n.player);
            check_comp_oblig_set(n.bo, n.set);
          } else if constexpr (std::is_same_v<T, ast::OutcomeCheck>) {
            check_outcome(n.bo, n.value);
          } else if constexpr (std::is_same_v<T, ast::TimeDirect>) {
            check_event_var(n.event_var, r);
          } else if constexpr (std::is_same_v<T, ast::TimePartial>) {
            check_event_var(n.event_var, r);
            if (n.lo > n.hi || !unit_in_range(n.unit, n.lo) ||
                !unit_in_range(n.unit, n.hi)) {
              error(codes::kBadTimeConstraint,
                    "invalid " + std::string(to_string(n.unit)) + " range [" +
                        std::to_string(n.lo) + ", " + std::to_string(n.hi) + "]",
                    n.range_pos);
            }
          } else {
            std::array<bool, 4> seen{};
            for (const auto& f : n.fields) {
              int i = event_field_index(f.name.text);
              if (i < 0 || seen[static_cast<std::size_t>(i)]) {
                error(codes::kBadHistoricalField,
                      "unknown or repeated event field " + quote_name(f.name.text) +
                          " in historical constraint",
                      f.name.pos);
                continue;
              }
              seen[static_cast<std::size_t>(i)] = true;
              if (i == 1 || i == 2) check_party(f.value);
            }
          }
        },
        c);
  }

  void check_action(const ast::Action& a, const ast::Rule& r) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ast::RopManip>) {
            check_player(n.player);
            check_operation(n.bo);
            check_comp_oblig_set(n.bo, n.set);
            check_arguments(n);
          } else if constexpr (std::is_same_v<T, ast::OutcomeSet>) {
            check_outcome(n.bo, n.value);
          } else if constexpr (std::is_same_v<T, ast::Reset>) {
            check_player(n.player);
          } else {
            for (const auto& c : n.cond) check_constraint(c, r);
            for (const auto& t : n.then_actions) check_action(t, r);
            if (n.else_actions) {
              for (const auto& e : *n.else_actions) check_action(e, r);
            }
          }
        },
        a.node);
  }

  void check_arguments(const ast::RopManip& m) {
    const auto& args = m.args;
    if (args.size() > 2) {
      error(codes::kBadArguments,
            "ROP manipulation of " + quote_name(m.bo.text) +
                " takes a role player and an optional deadline, found " +
                std::to_string(args.size()) + " arguments",
            args[2].pos);
      return;
    }
    if (args[0].is_string) {
      error(codes::kBadArguments,
            "first argument of " + quote_name(m.bo.text) + " must be a role player",
            args[0].pos);
    } else {
      check_party({args[0].text, args[0].pos});
    }
    if (args.size() == 2) {
      if (!args[1].is_string) {
        error(codes::kBadArguments,
              "deadline of " + quote_name(m.bo.text) + " must be a string literal",
              args[1].pos);
      } else if (m.op == ManipOp::kRemove) {
        error(codes::kBadArguments,
              "a deadline is only allowed when adding " + quote_name(m.bo.text),
              args[1].pos);
      }
    }
  }

  void check_rule(const ast::Rule& r) {
    check_event_match(r);
    for (const auto& c : r.constraints) check_constraint(c, r);
    for (const auto& a : r.actions) {
      if (const auto* i = std::get_if<ast::If>(&a.node);
          i && r.actions.size() > 1) {
        error(codes::kIfWithSiblings,
              "if statement must be the only action of rule " + quote_name(r.name.text),
              i->pos);
      }
      check_action(a, r);
    }
  }

  const ast::Contract& c_;
  const SymbolTable& tab_;
  std::vector<Diagnostic> diags_;
  std::set<std::string> used_;
  std::set<std::string> reported_unused_;
};

}  // namespace detail

/// Validates every rule against the symbol table. The result holds no
/// errors iff the contract may be lowered; warnings do not block lowering.
/// Sorted by (line, col).
inline std::vector<Diagnostic> check_contract(const ast::Contract& contract,
                                              const SymbolTable& table) {
  return detail::Checker(contract, table).run();
}

/// build_symbol_table() and check_contract() merged into one sorted list.
inline std::vector<Diagnostic> analyze(const ast::Contract& contract,
                                       SymbolTable& table_out) {
  SymbolTableResult built = build_symbol_table(contract);
  std::vector<Diagnostic> diags = std::move(built.diagnostics);
  std::vector<Diagnostic> more = check_contract(contract, built.table);
  diags.insert(diags.end(), more.begin(), more.end());
  sort_diagnostics(diags);
  table_out = std::move(built.table);
  return diags;
}

}  // namespace erop

#endif  // EROP_SEMA_HPP_
