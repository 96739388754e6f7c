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

// Deciders for the data-set properties of a network. Every property is a
// statement about the consistent full instances (the completions) of some
// quantified partial instance:
//
//   functional(A, B)  every instance over A has <= 1 outcome on B
//   total(A, B)       every instance over A has >= 1 completion
//   injective(A, B)   every instance over B has <= 1 outcome on A
//   surjective(A, B)  every instance over B has >= 1 completion
//   surjective_in(S)  every value of S occurs in some completion
//   minimal(A, B)     no set Q in A can be dropped without changing the
//                     B-outcomes of some instance over A
//
// "Outcome" is a whole completion in CountMode::kFull and its projection in
// CountMode::kProjected. Forward checks use A = data selection, B = sinks;
// backward checks use B = sources.

#include <exception>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "semnet/engine.hpp"
#include "semnet/network.hpp"
#include "semnet/validate.hpp"

namespace semnet {

enum class PropertyKind { kFunctional, kTotal, kInjective, kSurjective, kSurjectiveIn, kMinimal };

enum class Direction { kForward, kBackward };

inline std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::kFunctional: return "FUNCTIONAL";
    case PropertyKind::kTotal: return "TOTAL";
    case PropertyKind::kInjective: return "INJECTIVE";
    case PropertyKind::kSurjective: return "SURJECTIVE";
    case PropertyKind::kSurjectiveIn: return "SURJECTIVE_IN";
    case PropertyKind::kMinimal: return "MINIMAL";
  }
  return "UNKNOWN";
}

inline std::string_view to_string(Direction direction) {
  return direction == Direction::kForward ? "forward" : "backward";
}

struct PropertyQuery {
  PropertyKind kind = PropertyKind::kFunctional;
  Scope from;
  Scope to;
  CountMode mode = CountMode::kProjected;
  std::optional<SetIndex> param;  // kSurjectiveIn only, and then a member of `to`

  friend bool operator==(const PropertyQuery&, const PropertyQuery&) = default;
};

struct Witness {
  Instance anchor;
  std::vector<Instance> evidence;  // consistent full instances
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  PropertyQuery query;
  bool holds = true;
  std::vector<Witness> witnesses;
  std::uint64_t instances_checked = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct CheckOptions {
  /// Threads used for the outer quantification. Results do not depend on it.
  unsigned workers = 1;
};

inline Scope data_scope(const Engine& engine) { return engine.scope_of(engine.network().data_selection); }
inline Scope source_scope(const Engine& engine) { return engine.scope_of(sources(engine.network())); }
inline Scope sink_scope(const Engine& engine) { return engine.scope_of(sinks(engine.network())); }

namespace detail {

struct ScanResult {
  std::uint64_t checked = 0;
  std::optional<Witness> failure;
};

// Runs `probe` over the instances of `scope` in canonical order and stops at
// the first one that yields a witness. With several workers, instances are
// evaluated block-wise in parallel and the earliest failure in canonical
// order wins, so the result is identical to the sequential scan.
template <class Probe>
ScanResult first_failure(const Engine& engine, const Scope& scope, unsigned workers, Probe&& probe) {
  ScanResult result;
  if (workers <= 1) {
    engine.for_each_instance(scope, [&](const Instance& inst) {
      ++result.checked;
      result.failure = probe(inst);
      return !result.failure;
    });
    return result;
  }

  const auto instances = engine.enumerate_instances(scope);
  const std::size_t block = static_cast<std::size_t>(workers) * 16;
  for (std::size_t start = 0; start < instances.size(); start += block) {
    const std::size_t stop = std::min(instances.size(), start + block);
    std::vector<std::optional<Witness>> found(stop - start);
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = start + w; i < stop; i += workers) found[i - start] = probe(instances[i]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (found[i]) {
        result.checked = start + i + 1;
        result.failure = std::move(found[i]);
        return result;
      }
    }
  }
  result.checked = instances.size();
  return result;
}

inline std::vector<ValueIndex> key_of(const Instance& full, const Scope& key) {
  std::vector<ValueIndex> out;
  out.reserve(key.size());
  for (SetIndex s : key) out.push_back(full[s]);
  return out;
}

// First completion, then the first later completion whose projection onto
// `key` differs from it.
inline std::optional<std::pair<Instance, Instance>> two_distinct(const Engine& engine, const Instance& partial,
                                                                 const Scope& key) {
  std::optional<Instance> first;
  std::optional<std::pair<Instance, Instance>> pair;
  engine.for_each_completion(partial, [&](const Instance& full) {
    if (!first) {
      first = full;
      return true;
    }
    if (key_of(full, key) != key_of(*first, key)) {
      pair.emplace(*first, full);
      return false;
    }
    return true;
  });
  return pair;
}

inline bool has_completion(const Engine& engine, const Instance& partial) {
  return !engine.for_each_completion(partial, [](const Instance&) { return false; });
}

inline void check_scope(const Engine& engine, const Scope& scope) {
  for (SetIndex s : scope) {
    if (s >= engine.set_count()) throw Error(ErrorCode::kUnknownSet, "scope refers to an unknown set");
  }
}

inline Verdict at_most_one(const Engine& engine, PropertyQuery query, const Scope& quantified,
                           const Scope& counted, const char* note, const CheckOptions& options) {
  check_scope(engine, query.from);
  check_scope(engine, query.to);
  const Scope key = query.mode == CountMode::kFull ? engine.all_sets() : counted;
  auto scan = first_failure(engine, quantified, options.workers, [&](const Instance& anchor) -> std::optional<Witness> {
    auto pair = two_distinct(engine, anchor, key);
    if (!pair) return std::nullopt;
    return Witness{anchor, {std::move(pair->first), std::move(pair->second)}, note};
  });
  Verdict verdict{std::move(query), !scan.failure, {}, scan.checked};
  if (scan.failure) verdict.witnesses.push_back(std::move(*scan.failure));
  return verdict;
}

inline Verdict at_least_one(const Engine& engine, PropertyQuery query, const Scope& quantified, const char* note,
                            const CheckOptions& options) {
  check_scope(engine, query.from);
  check_scope(engine, query.to);
  auto scan = first_failure(engine, quantified, options.workers, [&](const Instance& anchor) -> std::optional<Witness> {
    if (has_completion(engine, anchor)) return std::nullopt;
    return Witness{anchor, {}, note};
  });
  Verdict verdict{std::move(query), !scan.failure, {}, scan.checked};
  if (scan.failure) verdict.witnesses.push_back(std::move(*scan.failure));
  return verdict;
}

}  // namespace detail

/// Every instance over `from` evaluates to at most one outcome on `to`.
inline Verdict check_functional(const Engine& engine, const Scope& from, const Scope& to, CountMode mode,
                                const CheckOptions& options = {}) {
  return detail::at_most_one(engine, {PropertyKind::kFunctional, from, to, mode, std::nullopt}, from, to,
                             "multiple-outcomes", options);
}

/// Every instance over `from` has at least one consistent completion. The
/// result does not depend on `to` or `mode`; both are recorded in the query.
inline Verdict check_total(const Engine& engine, const Scope& from, const Scope& to, CountMode mode,
                           const CheckOptions& options = {}) {
  return detail::at_least_one(engine, {PropertyKind::kTotal, from, to, mode, std::nullopt}, from, "no-completion",
                              options);
}

/// Every instance over `to` results from at most one outcome on `from`.
inline Verdict check_injective(const Engine& engine, const Scope& from, const Scope& to, CountMode mode,
                               const CheckOptions& options = {}) {
  return detail::at_most_one(engine, {PropertyKind::kInjective, from, to, mode, std::nullopt}, to, from,
                             "multiple-preimages", options);
}

/// Every instance over `to` is reached by some consistent completion.
inline Verdict check_surjective(const Engine& engine, const Scope& from, const Scope& to, CountMode mode,
                                const CheckOptions& options = {}) {
  return detail::at_least_one(engine, {PropertyKind::kSurjective, from, to, mode, std::nullopt}, to, "unreachable",
                              options);
}

/// Every value of `param` occurs in some consistent completion. Throws
/// kInvalidQuery unless `param` is a member of `to`.
inline Verdict check_surjective_in(const Engine& engine, SetIndex param, const Scope& from, const Scope& to,
                                   CountMode mode, const CheckOptions& options = {}) {
  if (!to.contains(param)) {
    throw Error(ErrorCode::kInvalidQuery, "surjectivity parameter must be part of the target scope");
  }
  return detail::at_least_one(engine, {PropertyKind::kSurjectiveIn, from, to, mode, param}, Scope({param}),
                              "unrealizable", options);
}

inline Verdict check_surjective_in(const Engine& engine, SetIndex param, CountMode mode,
                                   const CheckOptions& options = {}) {
  return check_surjective_in(engine, param, data_scope(engine), Scope({param}), mode, options);
}

/// For every Q in `from` there is an instance i over `from` whose outcomes
/// differ from those of i restricted to from \ {Q}. A failing verdict lists
/// every redundant Q, one witness each.
///
/// Outcomes of i are derived from the completions of its restriction r,
/// grouped by the value they give Q: completions(r + q) is exactly the group
/// of q, and the outcomes of r are the union of all groups.
inline Verdict check_minimal(const Engine& engine, const Scope& from, const Scope& to, CountMode mode,
                             const CheckOptions& options = {}) {
  detail::check_scope(engine, from);
  detail::check_scope(engine, to);
  const Scope key = mode == CountMode::kFull ? engine.all_sets() : to;
  Verdict verdict{{PropertyKind::kMinimal, from, to, mode, std::nullopt}, true, {}, 0};
  const auto& net = engine.network();

  for (SetIndex removed : from) {
    const auto value_count = static_cast<ValueIndex>(net.sets[removed].values.size());
    auto scan = detail::first_failure(
        engine, from.without(removed), options.workers, [&](const Instance& rest) -> std::optional<Witness> {
          std::map<ValueIndex, std::set<std::vector<ValueIndex>>> by_value;
          std::set<std::vector<ValueIndex>> all;
          engine.for_each_completion(rest, [&](const Instance& full) {
            auto outcome = detail::key_of(full, key);
            by_value[full[removed]].insert(outcome);
            all.insert(std::move(outcome));
            return true;
          });
          for (ValueIndex q = 0; q < value_count; ++q) {
            auto it = by_value.find(q);
            const bool same = it == by_value.end() ? all.empty() : it->second == all;
            if (!same) return Witness{rest, {}, "distinguishing"};
          }
          return std::nullopt;
        });
    verdict.instances_checked += scan.checked;
    if (!scan.failure) {
      verdict.holds = false;
      verdict.witnesses.push_back(Witness{engine.empty_instance(), {}, "redundant:" + net.sets[removed].id});
    }
  }
  return verdict;
}

/// Dispatches on query.kind.
inline Verdict check(const Engine& engine, const PropertyQuery& query, const CheckOptions& options = {}) {
  if (query.param.has_value() != (query.kind == PropertyKind::kSurjectiveIn)) {
    throw Error(ErrorCode::kInvalidQuery, "a parameter is required for, and only for, SURJECTIVE_IN");
  }
  switch (query.kind) {
    case PropertyKind::kFunctional: return check_functional(engine, query.from, query.to, query.mode, options);
    case PropertyKind::kTotal: return check_total(engine, query.from, query.to, query.mode, options);
    case PropertyKind::kInjective: return check_injective(engine, query.from, query.to, query.mode, options);
    case PropertyKind::kSurjective: return check_surjective(engine, query.from, query.to, query.mode, options);
    case PropertyKind::kSurjectiveIn:
      return check_surjective_in(engine, *query.param, query.from, query.to, query.mode, options);
    case PropertyKind::kMinimal: return check_minimal(engine, query.from, query.to, query.mode, options);
  }
  throw Error(ErrorCode::kInvalidQuery, "unknown property kind");
}

/// The five universal properties followed by surjectivity in each target
/// set. Scopes default to the data selection and the sinks (forward) or
/// sources (backward).
inline std::vector<Verdict> check_suite(const Engine& engine, Direction direction, CountMode mode,
                                        const CheckOptions& options = {}, std::optional<Scope> from = std::nullopt,
                                        std::optional<Scope> to = std::nullopt) {
  const Scope a = from ? *from : data_scope(engine);
  const Scope b = to ? *to : (direction == Direction::kForward ? sink_scope(engine) : source_scope(engine));
  std::vector<Verdict> verdicts;
  verdicts.push_back(check_functional(engine, a, b, mode, options));
  verdicts.push_back(check_total(engine, a, b, mode, options));
  verdicts.push_back(check_injective(engine, a, b, mode, options));
  verdicts.push_back(check_surjective(engine, a, b, mode, options));
  verdicts.push_back(check_minimal(engine, a, b, mode, options));
  for (SetIndex s : b) verdicts.push_back(check_surjective_in(engine, s, a, b, mode, options));
  return verdicts;
}

}  // namespace semnet
