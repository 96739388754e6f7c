// Copyright (c) 2026, The semnet Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semnet/error.hpp"

namespace semnet {

using SetIndex = std::size_t;
using ValueIndex = std::int32_t;

inline constexpr ValueIndex kUnassigned = -1;

/// A named finite domain (a data node). Values are qualified by the set id,
/// so two sets may reuse the same symbol text and still stay disjoint.
struct ValueSet {
  std::string id;
  std::vector<std::string> values;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;
};

/// A calculation node given extensionally. Each row carries one value per
/// involved set: the in_sets first, then the out_sets.
struct Relation {
  std::string id;
  std::vector<std::string> in_sets;
  std::vector<std::string> out_sets;
  std::vector<std::vector<std::string>> rows;

  std::vector<std::string> involved() const {
    std::vector<std::string> all = in_sets;
    all.insert(all.end(), out_sets.begin(), out_sets.end());
    return all;
  }

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Network {
  std::string name;
  std::vector<ValueSet> sets;
  std::vector<Relation> relations;
  std::vector<std::string> data_selection;

  std::optional<SetIndex> find_set(std::string_view id) const {
    for (SetIndex i = 0; i < sets.size(); ++i) {
      if (sets[i].id == id) return i;
    }
    return std::nullopt;
  }

  SetIndex set_index(std::string_view id) const {
    if (auto found = find_set(id)) return *found;
    throw Error(ErrorCode::kUnknownSet, "no value set named '" + std::string(id) + "'");
  }

  std::optional<ValueIndex> find_value(SetIndex set, std::string_view symbol) const {
    const auto& values = sets.at(set).values;
    auto it = std::find(values.begin(), values.end(), symbol);
    if (it == values.end()) return std::nullopt;
    return static_cast<ValueIndex>(it - values.begin());
  }

  friend bool operator==(const Network&, const Network&) = default;
};

/// Sorted, duplicate-free list of set indices.
class Scope {
 public:
  Scope() = default;

  explicit Scope(std::vector<SetIndex> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  static Scope all(std::size_t set_count) {
    std::vector<SetIndex> sets(set_count);
    for (SetIndex i = 0; i < set_count; ++i) sets[i] = i;
    return Scope(std::move(sets));
  }

  bool contains(SetIndex set) const { return std::binary_search(sets_.begin(), sets_.end(), set); }

  bool includes(const Scope& other) const {
    return std::includes(sets_.begin(), sets_.end(), other.sets_.begin(), other.sets_.end());
  }

  Scope without(SetIndex set) const {
    std::vector<SetIndex> rest;
    for (SetIndex s : sets_) {
      if (s != set) rest.push_back(s);
    }
    return Scope(std::move(rest));
  }

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  SetIndex operator[](std::size_t i) const { return sets_[i]; }

  friend bool operator==(const Scope&, const Scope&) = default;
  friend auto operator<=>(const Scope&, const Scope&) = default;

 private:
  std::vector<SetIndex> sets_;
};

/// Resolves set ids against a network. Throws kUnknownSet.
inline Scope scope_of(const Network& net, std::span<const std::string> ids) {
  std::vector<SetIndex> sets;
  sets.reserve(ids.size());
  for (const auto& id : ids) sets.push_back(net.set_index(id));
  return Scope(std::move(sets));
}

inline std::vector<std::string> ids_of(const Network& net, const Scope& scope) {
  std::vector<std::string> ids;
  ids.reserve(scope.size());
  for (SetIndex s : scope) ids.push_back(net.sets[s].id);
  return ids;
}

/// An assignment of one value to each set of its scope and nothing elsewhere.
/// Stored densely over all sets of the owning network, with kUnassigned
/// marking sets outside the scope. Comparison is lexicographic in set
/// declaration order, which is the canonical enumeration order.
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::size_t set_count) : values_(set_count, kUnassigned) {}

  std::size_t set_count() const { return values_.size(); }
  ValueIndex operator[](SetIndex set) const { return values_[set]; }
  bool assigned(SetIndex set) const { return values_[set] != kUnassigned; }
  void assign(SetIndex set, ValueIndex value) { values_[set] = value; }
  void clear(SetIndex set) { values_[set] = kUnassigned; }
  std::span<const ValueIndex> values() const { return values_; }

  Scope scope() const {
    std::vector<SetIndex> sets;
    for (SetIndex i = 0; i < values_.size(); ++i) {
      if (values_[i] != kUnassigned) sets.push_back(i);
    }
    return Scope(std::move(sets));
  }

  bool is_full() const {
    return std::none_of(values_.begin(), values_.end(), [](ValueIndex v) { return v == kUnassigned; });
  }

  bool extends(const Instance& partial) const {
    for (SetIndex i = 0; i < values_.size(); ++i) {
      if (partial.values_[i] != kUnassigned && partial.values_[i] != values_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Instance&, const Instance&) = default;
  friend auto operator<=>(const Instance&, const Instance&) = default;

 private:
  std::vector<ValueIndex> values_;
};

/// Restriction of an instance to `scope`. Throws kScopeMismatch unless the
/// instance assigns every set of `scope`.
inline Instance project(const Instance& instance, const Scope& scope) {
  Instance out(instance.set_count());
  for (SetIndex s : scope) {
    if (s >= instance.set_count() || !instance.assigned(s)) {
      throw Error(ErrorCode::kScopeMismatch, "projection target is not inside the instance scope");
    }
    out.assign(s, instance[s]);
  }
  return out;
}

/// Builds an instance from (set id, value symbol) pairs.
inline Instance make_instance(const Network& net,
                              std::span<const std::pair<std::string, std::string>> assignment) {
  Instance inst(net.sets.size());
  for (const auto& [set_id, symbol] : assignment) {
    SetIndex s = net.set_index(set_id);
    auto v = net.find_value(s, symbol);
    if (!v) {
      throw Error(ErrorCode::kScopeMismatch,
                  "value '" + symbol + "' is not in set '" + set_id + "'");
    }
    inst.assign(s, *v);
  }
  return inst;
}

inline Instance make_instance(const Network& net,
                              std::initializer_list<std::pair<std::string, std::string>> assignment) {
  std::vector<std::pair<std::string, std::string>> pairs(assignment);
  return make_instance(net, std::span<const std::pair<std::string, std::string>>(pairs));
}

inline std::vector<std::pair<std::string, std::string>> named(const Network& net, const Instance& inst) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (SetIndex s = 0; s < inst.set_count(); ++s) {
    if (inst.assigned(s)) pairs.emplace_back(net.sets[s].id, net.sets[s].values[inst[s]]);
  }
  return pairs;
}

/// `{X=x1, Y=y1}`
inline std::string to_string(const Network& net, const Instance& inst) {
  std::string out = "{";
  bool first = true;
  for (const auto& [set, value] : named(net, inst)) {
    if (!first) out += ", ";
    first = false;
    out += set;
    out += '=';
    out += value;
  }
  out += '}';
  return out;
}

/// `{X, Y}`
inline std::string to_string(const Network& net, const Scope& scope) {
  std::string out = "{";
  bool first = true;
  for (SetIndex s : scope) {
    if (!first) out += ", ";
    first = false;
    out += net.sets[s].id;
  }
  out += '}';
  return out;
}

}  // namespace semnet
