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

#ifndef EROP_LOOKUP_HPP_
#define EROP_LOOKUP_HPP_

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace erop {

/// Malformed lookup file. `line` is 1-based.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg)
      : std::runtime_error(msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A key the emitter needed but the table lacks.
class MissingLookupKey : public std::runtime_error {
 public:
  explicit MissingLookupKey(std::string key)
      : std::runtime_error("no lookup entry for key '" + key + "'"),
        key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Maps EROP constructs to the method names of the target ontology classes.
class LookupTable {
 public:
  LookupTable() = default;
  explicit LookupTable(std::map<std::string, std::string> entries)
      : entries_(std::move(entries)) {}

  /// The built-in mapping every emitted contract starts from.
  static LookupTable defaults() {
    return LookupTable({
        {"rop.matches.rights", "matchesRights"},
        {"rop.matches.obligs", "matchesObligations"},
        {"rop.matches.prohibs", "matchesProhibitions"},
        {"rop.add.right", "addRight"},
        {"rop.remove.right", "removeRight"},
        {"rop.add.oblig", "addObligation"},
        {"rop.remove.oblig", "removeObligation"},
        {"rop.add.prohib", "addProhibition"},
        {"rop.remove.prohib", "removeProhibition"},
        {"bizfail.get", "getBusinessFailure"},
        {"bizfail.set", "setBusinessFailure"},
        {"reset", "reset"},
        {"historical.happened", "eventHappened"},
        {"time.stamp", "getTimestamp"},
        {"time.hour", "getHour"},
        {"time.minute", "getMinute"},
        {"time.day", "getDay"},
        {"time.month", "getMonth"},
        {"time.year", "getYear"},
    });
  }

  /// Throws MissingLookupKey.
  const std::string& resolve(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw MissingLookupKey(key);
    return it->second;
  }

  bool contains(const std::string& key) const { return entries_.count(key) != 0; }
  void set(std::string key, std::string value) {
    entries_[std::move(key)] = std::move(value);
  }
  bool erase(const std::string& key) { return entries_.erase(key) != 0; }
  const std::map<std::string, std::string>& entries() const { return entries_; }

  friend bool operator==(const LookupTable&, const LookupTable&) = default;

 private:
  std::map<std::string, std::string> entries_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Reads `key = value` lines (`#` comments, blank lines ignored) and layers
/// them over the defaults. Throws ConfigError on a line without `=`, an empty
/// key or value, or a key repeated within the text.
inline LookupTable load_lookup(std::string_view text) {
  LookupTable table = LookupTable::defaults();
  std::set<std::string> in_file;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = detail::trim(line);
    if (line.empty()) continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected 'key = value'");
    }
    std::string key(detail::trim(line.substr(0, eq)));
    std::string value(detail::trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      throw ConfigError(line_no, "expected 'key = value'");
    }
    if (!in_file.insert(key).second) {
      throw ConfigError(line_no, "duplicate key '" + key + "'");
    }
    table.set(std::move(key), std::move(value));
  }
  return table;
}

}  // namespace erop

#endif  // EROP_LOOKUP_HPP_
