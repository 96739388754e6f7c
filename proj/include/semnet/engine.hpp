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

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "semnet/error.hpp"
#include "semnet/network.hpp"
#include "semnet/validate.hpp"

namespace semnet {

/// kFull counts consistent full instances; kProjected counts their distinct
/// projections onto the target scope.
enum class CountMode { kFull, kProjected };

/// kJoin backtracks over the unassigned sets and checks each relation as soon
/// as its last set is fixed. kBruteForce generates every candidate full
/// instance and filters it through is_consistent.
enum class EngineKind { kJoin, kBruteForce };

inline std::string_view to_string(CountMode mode) { return mode == CountMode::kFull ? "full" : "projected"; }
inline std::string_view to_string(EngineKind kind) { return kind == EngineKind::kJoin ? "join" : "bruteforce"; }

struct Limits {
  /// Largest candidate space a single enumeration may cover.
  std::uint64_t max_enumerated = 10'000'000;
  /// Counting stops once this many distinct items have been seen.
  std::optional<std::uint64_t> cap;
};

class Engine {
 public:
  /// Throws kInvalidNetwork if `net` does not validate.
  explicit Engine(Network net, EngineKind kind = EngineKind::kJoin, Limits limits = {})
      : net_(std::move(net)), kind_(kind), limits_(limits) {
    if (limits_.max_enumerated < 1) throw Error(ErrorCode::kInvalidQuery, "max_enumerated must be at least 1");
    auto report = validate(net_);
    if (!report.ok()) {
      const auto& first = report.errors.front();
      throw Error(ErrorCode::kInvalidNetwork, first.code + " at " + first.location + ": " + first.message);
    }
    sizes_.reserve(net_.sets.size());
    for (const auto& set : net_.sets) sizes_.push_back(static_cast<ValueIndex>(set.values.size()));
    for (const auto& rel : net_.relations) relations_.push_back(compile(rel));
  }

  const Network& network() const { return net_; }
  EngineKind kind() const { return kind_; }
  const Limits& limits() const { return limits_; }
  std::size_t set_count() const { return sizes_.size(); }
  Scope all_sets() const { return Scope::all(set_count()); }
  Instance empty_instance() const { return Instance(set_count()); }

  Scope scope_of(std::span<const std::string> ids) const { return semnet::scope_of(net_, ids); }

  /// Product of the set sizes in `scope`, saturating at UINT64_MAX.
  std::uint64_t space_size(const Scope& scope) const {
    std::uint64_t product = 1;
    for (SetIndex s : scope) {
      check_set(s);
      const auto size = static_cast<std::uint64_t>(sizes_[s]);
      if (product > std::numeric_limits<std::uint64_t>::max() / size) return std::numeric_limits<std::uint64_t>::max();
      product *= size;
    }
    return product;
  }

  /// Visits every instance over `scope` in canonical order; `visit` returns
  /// false to stop. Returns false iff stopped early.
  template <class Visit>
  bool for_each_instance(const Scope& scope, Visit&& visit) const {
    require_within_limit(space_size(scope), "instance space");
    Instance cur(set_count());
    std::vector<SetIndex> sets(scope.begin(), scope.end());
    for (SetIndex s : sets) cur.assign(s, 0);
    while (true) {
      if (!visit(static_cast<const Instance&>(cur))) return false;
      if (!advance(cur, sets)) return true;
    }
  }

  std::vector<Instance> enumerate_instances(const Scope& scope) const {
    std::vector<Instance> out;
    for_each_instance(scope, [&](const Instance& inst) {
      out.push_back(inst);
      return true;
    });
    return out;
  }

  /// Membership in the consistent-valuation space: every relation's
  /// projection of `full` is one of its rows. Throws kScopeMismatch for
  /// partial instances.
  bool is_consistent(const Instance& full) const {
    check_instance(full);
    if (!full.is_full()) throw Error(ErrorCode::kScopeMismatch, "is_consistent needs a full instance");
    std::vector<ValueIndex> tuple;
    for (const auto& rel : relations_) {
      tuple.clear();
      for (SetIndex s : rel.sets) tuple.push_back(full[s]);
      if (!std::binary_search(rel.sorted_rows.begin(), rel.sorted_rows.end(), tuple)) return false;
    }
    return true;
  }

  /// Visits the consistent full instances extending `partial`, in canonical
  /// order. `visit` returns false to stop; the result is false iff stopped.
  /// Throws kLimitExceeded when the unassigned sets span more than
  /// max_enumerated candidates.
  template <class Visit>
  bool for_each_completion(const Instance& partial, Visit&& visit) const {
    check_instance(partial);
    std::vector<SetIndex> free;
    for (SetIndex s = 0; s < set_count(); ++s) {
      if (!partial.assigned(s)) free.push_back(s);
    }
    require_within_limit(space_size(Scope(free)), "completion space");
    return kind_ == EngineKind::kJoin ? join(partial, free, visit) : brute_force(partial, free, visit);
  }

  std::vector<Instance> completions(const Instance& partial) const {
    std::vector<Instance> out;
    for_each_completion(partial, [&](const Instance& full) {
      out.push_back(full);
      return true;
    });
    return out;
  }

  /// Number of completions (kFull) or of their distinct projections onto
  /// `target` (kProjected). Stops at `cap`, falling back to limits().cap.
  std::uint64_t count_distinct(const Instance& partial, const Scope& target, CountMode mode,
                               std::optional<std::uint64_t> cap = std::nullopt) const {
    if (!cap) cap = limits_.cap;
    for (SetIndex s : target) check_set(s);
    std::uint64_t count = 0;
    std::set<std::vector<ValueIndex>> seen;
    for_each_completion(partial, [&](const Instance& full) {
      if (mode == CountMode::kFull) {
        ++count;
      } else {
        std::vector<ValueIndex> key;
        key.reserve(target.size());
        for (SetIndex s : target) key.push_back(full[s]);
        if (seen.insert(std::move(key)).second) ++count;
      }
      return !(cap && count >= *cap);
    });
    return count;
  }

 private:
  struct CompiledRelation {
    std::vector<SetIndex> sets;
    // Used by is_consistent (and therefore by the brute-force engine).
    std::vector<std::vector<ValueIndex>> sorted_rows;
    // Used by the join engine: rows encoded in mixed radix over `sets`.
    std::vector<std::uint64_t> strides;
    std::vector<bool> dense;
    std::unordered_set<std::uint64_t> hashed;
    bool encodable = true;
  };

  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

  CompiledRelation compile(const Relation& rel) const {
    CompiledRelation out;
    for (const auto& id : rel.involved()) out.sets.push_back(net_.set_index(id));
    for (const auto& row : rel.rows) {
      std::vector<ValueIndex> tuple;
      for (std::size_t k = 0; k < row.size(); ++k) tuple.push_back(*net_.find_value(out.sets[k], row[k]));
      out.sorted_rows.push_back(std::move(tuple));
    }
    std::sort(out.sorted_rows.begin(), out.sorted_rows.end());

    std::uint64_t extent = 1;
    out.strides.resize(out.sets.size());
    for (std::size_t k = out.sets.size(); k-- > 0;) {
      out.strides[k] = extent;
      const auto size = static_cast<std::uint64_t>(sizes_[out.sets[k]]);
      if (extent > std::numeric_limits<std::uint64_t>::max() / size) {
        out.encodable = false;
        return out;
      }
      extent *= size;
    }
    const bool use_dense = extent <= kDenseLimit;
    if (use_dense) out.dense.assign(extent, false);
    for (const auto& tuple : out.sorted_rows) {
      std::uint64_t code = 0;
      for (std::size_t k = 0; k < tuple.size(); ++k) code += out.strides[k] * static_cast<std::uint64_t>(tuple[k]);
      if (use_dense) {
        out.dense[code] = true;
      } else {
        out.hashed.insert(code);
      }
    }
    return out;
  }

  static bool allows(const CompiledRelation& rel, const Instance& inst) {
    if (!rel.encodable) {
      std::vector<ValueIndex> tuple;
      for (SetIndex s : rel.sets) tuple.push_back(inst[s]);
      return std::binary_search(rel.sorted_rows.begin(), rel.sorted_rows.end(), tuple);
    }
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < rel.sets.size(); ++k) code += rel.strides[k] * static_cast<std::uint64_t>(inst[rel.sets[k]]);
    return rel.dense.empty() ? rel.hashed.contains(code) : rel.dense[code];
  }

  template <class Visit>
  bool join(const Instance& partial, const std::vector<SetIndex>& free, Visit& visit) const {
    // A relation is checked at the depth where its last unassigned set is
    // fixed; relations fully covered by `partial` are checked up front.
    std::vector<std::ptrdiff_t> depth_of(set_count(), -1);
    for (std::size_t d = 0; d < free.size(); ++d) depth_of[free[d]] = static_cast<std::ptrdiff_t>(d);
    std::vector<std::vector<const CompiledRelation*>> checks(free.size());
    for (const auto& rel : relations_) {
      std::ptrdiff_t depth = -1;
      for (SetIndex s : rel.sets) depth = std::max(depth, depth_of[s]);
      if (depth < 0) {
        if (!allows(rel, partial)) return true;
      } else {
        checks[static_cast<std::size_t>(depth)].push_back(&rel);
      }
    }

    Instance cur = partial;
    auto descend = [&](auto& self, std::size_t d) -> bool {
      if (d == free.size()) return visit(static_cast<const Instance&>(cur));
      const SetIndex s = free[d];
      for (ValueIndex v = 0; v < sizes_[s]; ++v) {
        cur.assign(s, v);
        bool ok = true;
        for (const auto* rel : checks[d]) {
          if (!allows(*rel, cur)) {
            ok = false;
            break;
          }
        }
        if (ok && !self(self, d + 1)) return false;
      }
      cur.clear(s);
      return true;
    };
    return descend(descend, 0);
  }

  template <class Visit>
  bool brute_force(const Instance& partial, const std::vector<SetIndex>& free, Visit& visit) const {
    Instance cur = partial;
    for (SetIndex s : free) cur.assign(s, 0);
    while (true) {
      if (is_consistent(cur) && !visit(static_cast<const Instance&>(cur))) return false;
      if (!advance(cur, free)) return true;
    }
  }

  // Odometer step over `sets`, last set fastest. False once wrapped around.
  bool advance(Instance& cur, const std::vector<SetIndex>& sets) const {
    for (std::size_t k = sets.size(); k-- > 0;) {
      const SetIndex s = sets[k];
      if (cur[s] + 1 < sizes_[s]) {
        cur.assign(s, cur[s] + 1);
        return true;
      }
      cur.assign(s, 0);
    }
    return false;
  }

  void require_within_limit(std::uint64_t size, const char* what) const {
    if (size > limits_.max_enumerated) {
      throw Error(ErrorCode::kLimitExceeded, std::string(what) + " of " + std::to_string(size) +
                                                 " candidates exceeds max_enumerated=" +
                                                 std::to_string(limits_.max_enumerated));
    }
  }

  void check_set(SetIndex s) const {
    if (s >= set_count()) throw Error(ErrorCode::kUnknownSet, "set index " + std::to_string(s) + " out of range");
  }

  void check_instance(const Instance& inst) const {
    if (inst.set_count() != set_count()) {
      throw Error(ErrorCode::kScopeMismatch, "instance belongs to a network of a different shape");
    }
    for (SetIndex s = 0; s < set_count(); ++s) {
      if (inst.assigned(s) && (inst[s] < 0 || inst[s] >= sizes_[s])) {
        throw Error(ErrorCode::kScopeMismatch, "value index out of range for set '" + net_.sets[s].id + "'");
      }
    }
  }

  Network net_;
  EngineKind kind_;
  Limits limits_;
  std::vector<ValueIndex> sizes_;
  std::vector<CompiledRelation> relations_;
};

}  // namespace semnet
