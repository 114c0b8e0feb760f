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

#ifndef EROP_IR_HPP_
#define EROP_IR_HPP_

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "erop/ast.hpp"
#include "erop/sema.hpp"
#include "erop/symbols.hpp"

// Rule structure between the AST and the emitted rule text. The IR carries no
// source positions: every user-facing check happens before lowering.

namespace erop::ir {

struct EventMatchCondition {
  std::string botype;
  std::string originator;
  std::string responder;
  std::string outcome;
  friend bool operator==(const EventMatchCondition&,
                         const EventMatchCondition&) = default;
};

/// Presence of an operation in a role player's ROP set.
struct RopConstraint {
  std::string player;
  RopSet set = RopSet::kRights;
  std::string bo;
  friend bool operator==(const RopConstraint&, const RopConstraint&) = default;
};

/// Presence (or absence) of a past event. Unset fields match anything.
struct HistoricalConstraint {
  bool happened = true;
  std::array<std::optional<std::string>, 4> fields;  // botype..outcome
  friend bool operator==(const HistoricalConstraint&,
                         const HistoricalConstraint&) = default;
};

struct TimeDirectComparison {
  CompareOp op = CompareOp::kEq;
  std::string timestamp;
  friend bool operator==(const TimeDirectComparison&,
                         const TimeDirectComparison&) = default;
};

struct TimePartialComparison {
  TimeUnit unit = TimeUnit::kHour;
  long lo = 0;
  long hi = 0;
  friend bool operator==(const TimePartialComparison&,
                         const TimePartialComparison&) = default;
};

/// Getter form of `BO.BizFail == b`.
struct OutcomeConstraint {
  std::string bo;
  bool expected = false;
  friend bool operator==(const OutcomeConstraint&,
                         const OutcomeConstraint&) = default;
};

struct Constraint;

/// Negation of a conjunction; produced only by conditional splitting.
struct NegatedConjunction {
  std::vector<Constraint> terms;
  friend bool operator==(const NegatedConjunction&,
                         const NegatedConjunction&) = default;
};

struct Constraint {
  std::variant<RopConstraint, HistoricalConstraint, TimeDirectComparison,
               TimePartialComparison, OutcomeConstraint, NegatedConjunction>
      node;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct AddOrRemAction {
  std::string player;
  RopSet set = RopSet::kRights;
  ManipOp op = ManipOp::kAdd;
  std::string bo;
  std::string beneficiary;
  std::optional<std::string> deadline;
  friend bool operator==(const AddOrRemAction&, const AddOrRemAction&) = default;
};

/// Setter form of `BO.BizFail == b`.
struct OutcomeSet {
  std::string bo;
  bool value = false;
  friend bool operator==(const OutcomeSet&, const OutcomeSet&) = default;
};

struct ResetAction {
  std::string player;
  friend bool operator==(const ResetAction&, const ResetAction&) = default;
};

struct Action;

struct IfStatement {
  std::vector<Constraint> cond;
  std::vector<Action> then_actions;
  std::optional<std::vector<Action>> else_actions;
  friend bool operator==(const IfStatement&, const IfStatement&) = default;
};

struct Action {
  std::variant<AddOrRemAction, OutcomeSet, ResetAction, IfStatement> node;
  friend bool operator==(const Action&, const Action&) = default;
};

struct Rule {
  std::string name;
  EventMatchCondition event;
  std::vector<Constraint> constraints;
  std::vector<Action> actions;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Contract {
  SymbolTable symbols;
  std::vector<Rule> rules;
  std::string package_name;
  friend bool operator==(const Contract&, const Contract&) = default;
};

/// Raised when lowering meets a contract that sema should have rejected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline bool to_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw InternalError("non-boolean BizFail value '" + s + "' reached lowering");
}

inline Constraint lower_constraint(const ast::Constraint& c) {
  return std::visit(
      [](const auto& n) -> Constraint {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::RopMembership>) {
          return {RopConstraint{n.player.text, n.set, n.bo.text}};
        } else if constexpr (std::is_same_v<T, ast::OutcomeCheck>) {
          return {OutcomeConstraint{n.bo.text, to_bool(n.value.text)}};
        } else if constexpr (std::is_same_v<T, ast::TimeDirect>) {
          return {TimeDirectComparison{n.op, n.timestamp}};
        } else if constexpr (std::is_same_v<T, ast::TimePartial>) {
          return {TimePartialComparison{n.unit, n.lo, n.hi}};
        } else {
          HistoricalConstraint h;
          h.happened = n.happened;
          for (const auto& f : n.fields) {
            int i = event_field_index(f.name.text);
            if (i < 0) throw InternalError("unknown historical field reached lowering");
            h.fields[static_cast<std::size_t>(i)] = f.value.text;
          }
          return {h};
        }
      },
      c);
}

inline std::vector<Constraint> lower_constraints(
    const std::vector<ast::Constraint>& cs) {
  std::vector<Constraint> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(lower_constraint(c));
  return out;
}

inline std::vector<Action> lower_actions(const std::vector<ast::Action>& as);

inline Action lower_action(const ast::Action& a) {
  return std::visit(
      [](const auto& n) -> Action {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::RopManip>) {
          if (n.args.empty() || n.args.size() > 2 || n.args[0].is_string) {
            throw InternalError("malformed ROP manipulation reached lowering");
          }
          AddOrRemAction out{n.player.text, n.set, n.op, n.bo.text,
                             n.args[0].text, std::nullopt};
          if (n.args.size() == 2) out.deadline = n.args[1].text;
          return {out};
        } else if constexpr (std::is_same_v<T, ast::OutcomeSet>) {
          return {OutcomeSet{n.bo.text, to_bool(n.value.text)}};
        } else if constexpr (std::is_same_v<T, ast::Reset>) {
          return {ResetAction{n.player.text}};
        } else {
          IfStatement s;
          s.cond = lower_constraints(n.cond);
          s.then_actions = lower_actions(n.then_actions);
          if (n.else_actions) s.else_actions = lower_actions(*n.else_actions);
          return {s};
        }
      },
      a.node);
}

inline std::vector<Action> lower_actions(const std::vector<ast::Action>& as) {
  std::vector<Action> out;
  out.reserve(as.size());
  for (const auto& a : as) out.push_back(lower_action(a));
  return out;
}

}  // namespace detail

/// Lowers a sema-clean contract. Event fields land in their canonical slots
/// whatever their source order.
inline Contract lower_contract(const ast::Contract& contract,
                               const SymbolTable& table,
                               std::string package_name) {
  Contract out;
  out.symbols = table;
  out.package_name = std::move(package_name);
  for (const auto& r : contract.rules) {
    Rule rule;
    rule.name = r.name.text;
    std::array<std::string*, 4> slots = {&rule.event.botype,
                                         &rule.event.originator,
                                         &rule.event.responder,
                                         &rule.event.outcome};
    for (const auto& f : r.event_fields) {
      int i = event_field_index(f.name.text);
      if (i < 0) throw InternalError("unknown event field reached lowering");
      *slots[static_cast<std::size_t>(i)] = f.value.text;
    }
    for (const std::string* s : slots) {
      if (s->empty()) throw InternalError("incomplete event match reached lowering");
    }
    rule.constraints = detail::lower_constraints(r.constraints);
    rule.actions = detail::lower_actions(r.actions);
    out.rules.push_back(std::move(rule));
  }
  return out;
}

// ---------------------------------------------------------------------------
// --emit-ir dump: one line per rule. Not a stable format.
// ---------------------------------------------------------------------------

namespace detail {

inline void dump_constraint(std::ostream& os, const Constraint& c) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RopConstraint>) {
          os << "Rop(" << n.player << ',' << to_string(n.set) << ',' << n.bo << ')';
        } else if constexpr (std::is_same_v<T, HistoricalConstraint>) {
          os << (n.happened ? "Happened(" : "NotHappened(");
          for (std::size_t i = 0; i < n.fields.size(); ++i) {
            if (i) os << ',';
            os << (n.fields[i] ? *n.fields[i] : "*");
          }
          os << ')';
        } else if constexpr (std::is_same_v<T, TimeDirectComparison>) {
          os << "Time(" << to_string(n.op) << ",\"" << n.timestamp << "\")";
        } else if constexpr (std::is_same_v<T, TimePartialComparison>) {
          os << "TimeRange(" << to_string(n.unit) << ',' << n.lo << ',' << n.hi
             << ')';
        } else if constexpr (std::is_same_v<T, OutcomeConstraint>) {
          os << "Outcome(" << n.bo << ',' << (n.expected ? "true" : "false")
             << ')';
        } else {
          os << "Not(";
          for (std::size_t i = 0; i < n.terms.size(); ++i) {
            if (i) os << " & ";
            dump_constraint(os, n.terms[i]);
          }
          os << ')';
        }
      },
      c.node);
}

inline void dump_action(std::ostream& os, const Action& a) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AddOrRemAction>) {
          os << (n.op == ManipOp::kAdd ? "Add(" : "Remove(") << n.player << ','
             << to_string(n.set) << ',' << n.bo << ',' << n.beneficiary;
          if (n.deadline) os << ",\"" << *n.deadline << '"';
          os << ')';
        } else if constexpr (std::is_same_v<T, OutcomeSet>) {
          os << "SetOutcome(" << n.bo << ',' << (n.value ? "true" : "false")
             << ')';
        } else if constexpr (std::is_same_v<T, ResetAction>) {
          os << "Reset(" << n.player << ')';
        } else {
          os << "If([";
          for (std::size_t i = 0; i < n.cond.size(); ++i) {
            if (i) os << ' ';
            dump_constraint(os, n.cond[i]);
          }
          os << "] then [";
          for (std::size_t i = 0; i < n.then_actions.size(); ++i) {
            if (i) os << ' ';
            dump_action(os, n.then_actions[i]);
          }
          os << ']';
          if (n.else_actions) {
            os << " else [";
            for (std::size_t i = 0; i < n.else_actions->size(); ++i) {
              if (i) os << ' ';
              dump_action(os, (*n.else_actions)[i]);
            }
            os << ']';
          }
          os << ')';
        }
      },
      a.node);
}

}  // namespace detail

inline std::string dump_rule(const Rule& r) {
  std::ostringstream os;
  os << "rule \"" << r.name << "\" event{" << r.event.botype << ','
     << r.event.originator << ',' << r.event.responder << ',' << r.event.outcome
     << "} when[";
  for (std::size_t i = 0; i < r.constraints.size(); ++i) {
    if (i) os << ' ';
    detail::dump_constraint(os, r.constraints[i]);
  }
  os << "] then[";
  for (std::size_t i = 0; i < r.actions.size(); ++i) {
    if (i) os << ' ';
    detail::dump_action(os, r.actions[i]);
  }
  os << ']';
  return os.str();
}

inline std::string dump(const Contract& c) {
  std::string out;
  for (const auto& r : c.rules) {
    out += dump_rule(r);
    out += '\n';
  }
  return out;
}

}  // namespace erop::ir

#endif  // EROP_IR_HPP_
