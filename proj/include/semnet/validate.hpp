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

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semnet/network.hpp"

namespace semnet {

struct Issue {
  std::string code;
  std::string message;
  std::string location;  // "set X", "rel f", "data", "net"

  friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool ok() const { return errors.empty(); }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

inline bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '-'; };
  if (!head(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), tail);
}

/// `in` and `out` delimit the relation header in the textual format.
inline bool is_reserved_set_id(std::string_view text) { return text == "in" || text == "out"; }

/// Set ids appearing in no relation's out_sets, in declaration order.
inline std::vector<std::string> sources(const Network& net) {
  std::set<std::string> produced;
  for (const auto& rel : net.relations) produced.insert(rel.out_sets.begin(), rel.out_sets.end());
  std::vector<std::string> out;
  for (const auto& set : net.sets) {
    if (!produced.contains(set.id)) out.push_back(set.id);
  }
  return out;
}

/// Set ids appearing in no relation's in_sets, in declaration order.
inline std::vector<std::string> sinks(const Network& net) {
  std::set<std::string> consumed;
  for (const auto& rel : net.relations) consumed.insert(rel.in_sets.begin(), rel.in_sets.end());
  std::vector<std::string> out;
  for (const auto& set : net.sets) {
    if (!consumed.contains(set.id)) out.push_back(set.id);
  }
  return out;
}

struct StructuralFlags {
  bool is_acyclic = true;
  bool is_contiguous = true;

  friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

namespace detail {

// Bipartite graph: nodes [0, sets) are value sets, [sets, sets + relations)
// are calculations. Edges run set -> relation for in_sets and relation -> set
// for out_sets. References to unknown sets are dropped.
struct NetworkGraph {
  std::size_t set_count = 0;
  std::vector<std::vector<std::size_t>> next;
  std::vector<std::string> labels;

  explicit NetworkGraph(const Network& net) : set_count(net.sets.size()) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < net.sets.size(); ++i) index.emplace(net.sets[i].id, i);
    next.resize(net.sets.size() + net.relations.size());
    for (const auto& set : net.sets) labels.push_back(set.id);
    for (std::size_t r = 0; r < net.relations.size(); ++r) {
      const auto& rel = net.relations[r];
      const std::size_t node = set_count + r;
      labels.push_back(rel.id);
      for (const auto& id : rel.in_sets) {
        if (auto it = index.find(id); it != index.end()) next[it->second].push_back(node);
      }
      for (const auto& id : rel.out_sets) {
        if (auto it = index.find(id); it != index.end()) next[node].push_back(it->second);
      }
    }
  }

  /// First cycle found by depth-first search, as a closed node path.
  std::optional<std::vector<std::size_t>> find_cycle() const {
    enum class Color { kWhite, kGrey, kBlack };
    std::vector<Color> color(next.size(), Color::kWhite);
    std::vector<std::size_t> path;
    std::optional<std::vector<std::size_t>> cycle;

    // Iterative DFS; each frame remembers the next edge to follow.
    for (std::size_t root = 0; root < next.size() && !cycle; ++root) {
      if (color[root] != Color::kWhite) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
      color[root] = Color::kGrey;
      path.assign(1, root);
      while (!stack.empty() && !cycle) {
        auto& [node, edge] = stack.back();
        if (edge == next[node].size()) {
          color[node] = Color::kBlack;
          stack.pop_back();
          path.pop_back();
          continue;
        }
        std::size_t succ = next[node][edge++];
        if (color[succ] == Color::kGrey) {
          auto start = std::find(path.begin(), path.end(), succ);
          std::vector<std::size_t> found(start, path.end());
          found.push_back(succ);
          cycle = std::move(found);
        } else if (color[succ] == Color::kWhite) {
          color[succ] = Color::kGrey;
          path.push_back(succ);
          stack.emplace_back(succ, 0);
        }
      }
    }
    return cycle;
  }
};

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace detail

/// is_contiguous treats every edge as undirected and ignores sets that are in
/// no relation and not selected as data.
inline StructuralFlags structural_flags(const Network& net) {
  detail::NetworkGraph graph(net);
  StructuralFlags flags;
  flags.is_acyclic = !graph.find_cycle().has_value();

  const std::size_t n = graph.next.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<bool> counted(n, false);
  for (std::size_t r = graph.set_count; r < n; ++r) counted[r] = true;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : graph.next[u]) {
      counted[u] = counted[v] = true;
      parent[detail::find_root(parent, u)] = detail::find_root(parent, v);
    }
  }
  for (const auto& id : net.data_selection) {
    if (auto s = net.find_set(id)) counted[*s] = true;
  }
  std::set<std::size_t> roots;
  for (std::size_t u = 0; u < n; ++u) {
    if (counted[u]) roots.insert(detail::find_root(parent, u));
  }
  flags.is_contiguous = roots.size() <= 1;
  return flags;
}

/// Checks every structural invariant of a network. Never throws; an empty
/// error list means the network can be handed to the engine.
inline ValidationReport validate(const Network& net) {
  ValidationReport report;
  auto error = [&](std::string code, std::string message, std::string location) {
    report.errors.push_back({std::move(code), std::move(message), std::move(location)});
  };
  auto warning = [&](std::string code, std::string message, std::string location) {
    report.warnings.push_back({std::move(code), std::move(message), std::move(location)});
  };

  if (!is_identifier(net.name)) error("INVALID_ID", "network name '" + net.name + "' is not an identifier", "net");

  std::map<std::string, const ValueSet*> set_by_id;
  for (const auto& set : net.sets) {
    const std::string where = "set " + set.id;
    if (!is_identifier(set.id) || is_reserved_set_id(set.id)) {
      error("INVALID_ID", "'" + set.id + "' is not a usable set identifier", where);
    }
    if (!set_by_id.emplace(set.id, &set).second) {
      error("DUPLICATE_ID", "set '" + set.id + "' is declared more than once", where);
    }
    if (set.values.empty()) error("EMPTY_VALUE_SET", "set '" + set.id + "' has no values", where);
    std::set<std::string> seen;
    for (const auto& value : set.values) {
      if (!seen.insert(value).second) {
        error("DUPLICATE_VALUE", "value '" + value + "' appears twice in set '" + set.id + "'", where);
      }
      if (value.find_first_of("\r\n") != std::string::npos) {
        error("INVALID_VALUE", "value in set '" + set.id + "' contains a line break", where);
      }
    }
  }

  std::set<std::string> relation_ids;
  for (const auto& rel : net.relations) {
    const std::string where = "rel " + rel.id;
    if (!is_identifier(rel.id)) error("INVALID_ID", "'" + rel.id + "' is not a relation identifier", where);
    if (!relation_ids.insert(rel.id).second) {
      error("DUPLICATE_ID", "relation '" + rel.id + "' is declared more than once", where);
    }

    bool resolvable = true;
    auto check_list = [&](const std::vector<std::string>& list, const char* side) {
      std::set<std::string> seen;
      for (const auto& id : list) {
        if (!set_by_id.contains(id)) {
          error("UNKNOWN_SET", std::string(side) + " set '" + id + "' of relation '" + rel.id + "' is not declared", where);
          resolvable = false;
        }
        if (!seen.insert(id).second) {
          error("DUPLICATE_SET_REF", "set '" + id + "' listed twice in " + side + " of relation '" + rel.id + "'", where);
          resolvable = false;
        }
      }
    };
    check_list(rel.in_sets, "in");
    check_list(rel.out_sets, "out");
    for (const auto& id : rel.in_sets) {
      if (std::find(rel.out_sets.begin(), rel.out_sets.end(), id) != rel.out_sets.end()) {
        error("IN_OUT_OVERLAP", "set '" + id + "' is both input and output of relation '" + rel.id + "'", where);
        resolvable = false;
      }
    }

    if (rel.rows.empty()) warning("EMPTY_RELATION", "relation '" + rel.id + "' has no rows", where);
    if (!resolvable) continue;

    const auto involved = rel.involved();
    std::set<std::vector<std::string>> seen_rows;
    for (std::size_t r = 0; r < rel.rows.size(); ++r) {
      const auto& row = rel.rows[r];
      const std::string row_where = where + " row " + std::to_string(r + 1);
      if (row.size() != involved.size()) {
        error("ROW_ARITY", "row has " + std::to_string(row.size()) + " values, relation '" + rel.id + "' needs " +
                               std::to_string(involved.size()), row_where);
        continue;
      }
      for (std::size_t k = 0; k < row.size(); ++k) {
        const auto& values = set_by_id.at(involved[k])->values;
        if (std::find(values.begin(), values.end(), row[k]) == values.end()) {
          error("UNKNOWN_VALUE", "value '" + row[k] + "' is not in set '" + involved[k] + "'", row_where);
        }
      }
      if (!seen_rows.insert(row).second) error("DUPLICATE_ROW", "row repeats an earlier row", row_where);
    }
  }

  std::set<std::string> selected;
  for (const auto& id : net.data_selection) {
    if (!set_by_id.contains(id)) error("UNKNOWN_DATA_SET", "data selection names undeclared set '" + id + "'", "data");
    if (!selected.insert(id).second) error("DUPLICATE_DATA_SET", "data selection lists '" + id + "' twice", "data");
  }
  if (net.data_selection.empty()) warning("EMPTY_DATA_SELECTION", "no value set is selected as data", "data");

  detail::NetworkGraph graph(net);
  if (auto cycle = graph.find_cycle()) {
    std::string path;
    for (std::size_t node : *cycle) {
      if (!path.empty()) path += " -> ";
      path += graph.labels[node];
    }
    error("CYCLE", "network is cyclic: " + path, "net");
  }
  if (!structural_flags(net).is_contiguous) {
    warning("NOT_CONTIGUOUS", "network graph is not weakly connected", "net");
  }
  return report;
}

}  // namespace semnet
