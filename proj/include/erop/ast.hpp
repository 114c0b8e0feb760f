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

#ifndef EROP_AST_HPP_
#define EROP_AST_HPP_

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "erop/source.hpp"

namespace erop {

/// Shared vocabulary between the AST and the IR.
enum class RopSet { kRights, kObligs, kProhibs };
enum class ManipOp { kAdd, kRemove };
enum class CompareOp { kEq, kLess, kGreater };
enum class TimeUnit { kHour, kMinute, kDay, kMonth, kYear };

inline std::string_view to_string(RopSet s) {
  switch (s) {
    case RopSet::kRights: return "rights";
    case RopSet::kObligs: return "obligs";
    case RopSet::kProhibs: return "prohibs";
  }
  return "?";
}

inline std::optional<RopSet> rop_set_from(std::string_view s) {
  if (s == "rights") return RopSet::kRights;
  if (s == "obligs") return RopSet::kObligs;
  if (s == "prohibs") return RopSet::kProhibs;
  return std::nullopt;
}

inline std::string_view to_string(ManipOp op) {
  return op == ManipOp::kAdd ? "+=" : "-=";
}

inline std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "==";
    case CompareOp::kLess: return "<";
    case CompareOp::kGreater: return ">";
  }
  return "?";
}

inline std::string_view to_string(TimeUnit u) {
  switch (u) {
    case TimeUnit::kHour: return "hour";
    case TimeUnit::kMinute: return "minute";
    case TimeUnit::kDay: return "day";
    case TimeUnit::kMonth: return "month";
    case TimeUnit::kYear: return "year";
  }
  return "?";
}

inline std::optional<TimeUnit> time_unit_from(std::string_view s) {
  if (s == "hour") return TimeUnit::kHour;
  if (s == "minute") return TimeUnit::kMinute;
  if (s == "day") return TimeUnit::kDay;
  if (s == "month") return TimeUnit::kMonth;
  if (s == "year") return TimeUnit::kYear;
  return std::nullopt;
}

namespace ast {

/// An identifier together with where it was written.
struct Ident {
  std::string text;
  SourcePos pos;

  friend bool operator==(const Ident&, const Ident&) = default;
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct RolePlayers {
  SourcePos pos;
  std::vector<Ident> names;
  friend bool operator==(const RolePlayers&, const RolePlayers&) = default;
};

struct BusinessOps {
  SourcePos pos;
  std::vector<Ident> names;
  friend bool operator==(const BusinessOps&, const BusinessOps&) = default;
};

struct CompOblig {
  SourcePos pos;
  Ident name;
  std::vector<Ident> members;
  friend bool operator==(const CompOblig&, const CompOblig&) = default;
};

using Decl = std::variant<RolePlayers, BusinessOps, CompOblig>;

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

/// `name == value` inside an event match or a historical constraint.
struct EventField {
  Ident name;
  Ident value;
  friend bool operator==(const EventField&, const EventField&) = default;
};

/// `BO in player.set`
struct RopMembership {
  Ident bo;
  Ident player;
  RopSet set = RopSet::kRights;
  friend bool operator==(const RopMembership&, const RopMembership&) = default;
};

/// `BO.BizFail == value`; the value is checked to be a boolean in sema.
struct OutcomeCheck {
  Ident bo;
  Ident value;
  friend bool operator==(const OutcomeCheck&, const OutcomeCheck&) = default;
};

/// `e.timestamp <op> "timestamp"`
struct TimeDirect {
  Ident event_var;
  CompareOp op = CompareOp::kEq;
  std::string timestamp;
  SourcePos timestamp_pos;
  friend bool operator==(const TimeDirect&, const TimeDirect&) = default;
};

/// `e.unit in [lo, hi]`
struct TimePartial {
  Ident event_var;
  TimeUnit unit = TimeUnit::kHour;
  long lo = 0;
  long hi = 0;
  SourcePos range_pos;
  friend bool operator==(const TimePartial&, const TimePartial&) = default;
};

/// `happened (fields)` / `not happened (fields)`
struct Historical {
  SourcePos pos;
  bool happened = true;
  std::vector<EventField> fields;
  friend bool operator==(const Historical&, const Historical&) = default;
};

using Constraint =
    std::variant<RopMembership, OutcomeCheck, TimeDirect, TimePartial, Historical>;

/// Argument of a ROP manipulation: an identifier or a string literal.
struct Actual {
  bool is_string = false;
  std::string text;  // string literals without quotes
  SourcePos pos;
  friend bool operator==(const Actual&, const Actual&) = default;
};

/// `player.set += BO(args)` / `player.set -= BO(args)`
struct RopManip {
  Ident player;
  RopSet set = RopSet::kRights;
  ManipOp op = ManipOp::kAdd;
  Ident bo;
  std::vector<Actual> args;
  friend bool operator==(const RopManip&, const RopManip&) = default;
};

/// `BO.BizFail == value` on the right-hand side.
struct OutcomeSet {
  Ident bo;
  Ident value;
  friend bool operator==(const OutcomeSet&, const OutcomeSet&) = default;
};

/// `reset player` or `player reset`.
struct Reset {
  Ident player;
  friend bool operator==(const Reset&, const Reset&) = default;
};

struct Action;

struct If {
  SourcePos pos;
  std::vector<Constraint> cond;
  std::vector<Action> then_actions;
  std::optional<std::vector<Action>> else_actions;
  friend bool operator==(const If&, const If&) = default;
};

struct Action {
  std::variant<RopManip, OutcomeSet, Reset, If> node;
  friend bool operator==(const Action&, const Action&) = default;
};

struct Rule {
  SourcePos pos;  // the `rule` keyword
  Ident name;     // unquoted
  Ident event_var;
  std::vector<EventField> event_fields;
  std::vector<Constraint> constraints;
  std::vector<Action> actions;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Contract {
  std::vector<Decl> decls;
  std::vector<Rule> rules;
  friend bool operator==(const Contract&, const Contract&) = default;
};

// ---------------------------------------------------------------------------
// Debug dump (--emit-ast). Not a stable format.
// ---------------------------------------------------------------------------

namespace detail {

inline void dump_pos(std::ostream& os, const SourcePos& p) {
  os << '@' << p.line << ':' << p.col;
}

inline void dump_fields(std::ostream& os, const std::vector<EventField>& fs) {
  os << '(';
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) os << ", ";
    os << fs[i].name.text << " == " << fs[i].value.text;
  }
  os << ')';
}

inline void dump_constraint(std::ostream& os, const Constraint& c) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RopMembership>) {
          os << "(rop-member " << n.bo.text << ' ' << n.player.text << '.'
             << to_string(n.set) << ')';
        } else if constexpr (std::is_same_v<T, OutcomeCheck>) {
          os << "(outcome-check " << n.bo.text << ' ' << n.value.text << ')';
        } else if constexpr (std::is_same_v<T, TimeDirect>) {
          os << "(time " << n.event_var.text << ' ' << to_string(n.op) << " \""
             << n.timestamp << "\")";
        } else if constexpr (std::is_same_v<T, TimePartial>) {
          os << "(time-range " << n.event_var.text << '.' << to_string(n.unit)
             << " [" << n.lo << ", " << n.hi << "])";
        } else {
          os << (n.happened ? "(happened " : "(not-happened ");
          dump_fields(os, n.fields);
          os << ')';
        }
      },
      c);
}

inline void dump_actions(std::ostream& os, const std::vector<Action>& as,
                         int indent);

inline void dump_action(std::ostream& os, const Action& a, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RopManip>) {
          os << pad << "(rop-manip " << n.player.text << '.' << to_string(n.set)
             << ' ' << to_string(n.op) << ' ' << n.bo.text << '(';
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) os << ", ";
            if (n.args[i].is_string) {
              os << '"' << n.args[i].text << '"';
            } else {
              os << n.args[i].text;
            }
          }
          os << "))\n";
        } else if constexpr (std::is_same_v<T, OutcomeSet>) {
          os << pad << "(outcome-set " << n.bo.text << ' ' << n.value.text
             << ")\n";
        } else if constexpr (std::is_same_v<T, Reset>) {
          os << pad << "(reset " << n.player.text << ")\n";
        } else {
          os << pad << "(if";
          for (const auto& c : n.cond) {
            os << ' ';
            dump_constraint(os, c);
          }
          os << '\n' << pad << "  then\n";
          dump_actions(os, n.then_actions, indent + 4);
          if (n.else_actions) {
            os << pad << "  else\n";
            dump_actions(os, *n.else_actions, indent + 4);
          }
          os << pad << ")\n";
        }
      },
      a.node);
}

inline void dump_actions(std::ostream& os, const std::vector<Action>& as,
                         int indent) {
  for (const auto& a : as) dump_action(os, a, indent);
}

}  // namespace detail

inline std::string dump(const Contract& c) {
  std::ostringstream os;
  for (const auto& d : c.decls) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, CompOblig>) {
            os << "(compoblig " << n.name.text;
            for (const auto& m : n.members) os << ' ' << m.text;
          } else {
            os << (std::is_same_v<T, RolePlayers> ? "(roleplayer"
                                                  : "(businessoperation");
            for (const auto& m : n.names) os << ' ' << m.text;
          }
          os << ") ";
          detail::dump_pos(os, n.pos);
          os << '\n';
        },
        d);
  }
  for (const auto& r : c.rules) {
    os << "(rule \"" << r.name.text << "\" ";
    detail::dump_pos(os, r.pos);
    os << "\n  (match " << r.event_var.text << ' ';
    detail::dump_fields(os, r.event_fields);
    os << ")\n";
    for (const auto& k : r.constraints) {
      os << "  ";
      detail::dump_constraint(os, k);
      os << '\n';
    }
    detail::dump_actions(os, r.actions, 2);
    os << ")\n";
  }
  return os.str();
}

}  // namespace ast
}  // namespace erop

#endif  // EROP_AST_HPP_
