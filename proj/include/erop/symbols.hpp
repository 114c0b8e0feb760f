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

#ifndef EROP_SYMBOLS_HPP_
#define EROP_SYMBOLS_HPP_

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace erop {

enum class SymbolKind { kNone, kRolePlayer, kBusinessOp, kCompOblig };

inline std::string_view describe(SymbolKind k) {
  switch (k) {
    case SymbolKind::kRolePlayer: return "role player";
    case SymbolKind::kBusinessOp: return "business operation";
    case SymbolKind::kCompOblig: return "composite obligation";
    case SymbolKind::kNone: break;
  }
  return "undeclared name";
}

/// Names declared by a contract. All three name spaces are disjoint and
/// keep declaration order, which drives emission order.
class SymbolTable {
 public:
  struct CompObligEntry {
    std::string name;
    std::vector<std::string> members;

    friend bool operator==(const CompObligEntry&,
                           const CompObligEntry&) = default;
  };

  const std::vector<std::string>& role_players() const { return players_; }
  const std::vector<std::string>& business_ops() const { return ops_; }
  const std::vector<CompObligEntry>& comp_obligs() const { return obligs_; }

  SymbolKind kind_of(std::string_view name) const {
    if (contains(players_, name)) return SymbolKind::kRolePlayer;
    if (contains(ops_, name)) return SymbolKind::kBusinessOp;
    if (find_comp_oblig(name)) return SymbolKind::kCompOblig;
    return SymbolKind::kNone;
  }

  bool is_role_player(std::string_view n) const {
    return kind_of(n) == SymbolKind::kRolePlayer;
  }
  bool is_business_op(std::string_view n) const {
    return kind_of(n) == SymbolKind::kBusinessOp;
  }
  bool is_comp_oblig(std::string_view n) const {
    return kind_of(n) == SymbolKind::kCompOblig;
  }
  /// Anything that may sit in a ROP set.
  bool is_operation(std::string_view n) const {
    SymbolKind k = kind_of(n);
    return k == SymbolKind::kBusinessOp || k == SymbolKind::kCompOblig;
  }

  const CompObligEntry* find_comp_oblig(std::string_view name) const {
    auto it = std::find_if(obligs_.begin(), obligs_.end(),
                           [&](const auto& e) { return e.name == name; });
    return it == obligs_.end() ? nullptr : &*it;
  }

  /// Each add_* returns false and leaves the table unchanged if the name is
  /// already declared in any name space.
  bool add_role_player(std::string name) {
    if (kind_of(name) != SymbolKind::kNone) return false;
    players_.push_back(std::move(name));
    return true;
  }
  bool add_business_op(std::string name) {
    if (kind_of(name) != SymbolKind::kNone) return false;
    ops_.push_back(std::move(name));
    return true;
  }
  bool add_comp_oblig(std::string name, std::vector<std::string> members) {
    if (kind_of(name) != SymbolKind::kNone) return false;
    obligs_.push_back({std::move(name), std::move(members)});
    return true;
  }

  friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

 private:
  static bool contains(const std::vector<std::string>& v, std::string_view n) {
    return std::find(v.begin(), v.end(), n) != v.end();
  }

  std::vector<std::string> players_;
  std::vector<std::string> ops_;
  std::vector<CompObligEntry> obligs_;
};

}  // namespace erop

#endif  // EROP_SYMBOLS_HPP_
