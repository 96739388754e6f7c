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

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "semnet/network.hpp"
#include "semnet/properties.hpp"

namespace semnet {

struct ReportDocument {
  std::string network_name;
  Direction direction = Direction::kForward;
  CountMode mode = CountMode::kProjected;
  std::vector<Verdict> verdicts;
};

inline std::string render_text(const Network& net, std::span<const Verdict> verdicts) {
  std::string out;
  for (const auto& v : verdicts) {
    out += to_string(v.query.kind);
    if (v.query.param) out += "(" + net.sets[*v.query.param].id + ")";
    out += " from=" + to_string(net, v.query.from);
    out += " to=" + to_string(net, v.query.to);
    out += " mode=";
    out += to_string(v.query.mode);
    out += v.holds ? " : HOLDS\n" : " : FAILS\n";
    for (const auto& w : v.witnesses) {
      out += "  witness: " + to_string(net, w.anchor) + " -> [";
      for (std::size_t i = 0; i < w.evidence.size(); ++i) {
        if (i) out += ", ";
        out += to_string(net, w.evidence[i]);
      }
      out += "] (" + w.note + ")\n";
    }
  }
  return out;
}

namespace detail {

inline nlohmann::json instance_json(const Network& net, const Instance& inst) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [set, value] : named(net, inst)) obj[set] = value;
  return obj;
}

}  // namespace detail

/// Stable machine-readable report: sorted keys, 2-space indentation,
/// trailing newline, no timing data.
inline std::string render_json(const Network& net, const ReportDocument& doc) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : doc.verdicts) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : v.witnesses) {
      nlohmann::json evidence = nlohmann::json::array();
      for (const auto& e : w.evidence) evidence.push_back(detail::instance_json(net, e));
      witnesses.push_back({{"anchor", detail::instance_json(net, w.anchor)},
                           {"evidence", std::move(evidence)},
                           {"note", w.note}});
    }
    verdicts.push_back({
        {"property", std::string(to_string(v.query.kind))},
        {"from", ids_of(net, v.query.from)},
        {"to", ids_of(net, v.query.to)},
        {"param", v.query.param ? nlohmann::json(net.sets[*v.query.param].id) : nlohmann::json(nullptr)},
        {"holds", v.holds},
        {"witnesses", std::move(witnesses)},
        {"instances_checked", v.instances_checked},
    });
  }
  nlohmann::json root = {
      {"network", doc.network_name},
      {"direction", std::string(to_string(doc.direction))},
      {"mode", std::string(to_string(doc.mode))},
      {"verdicts", std::move(verdicts)},
  };
  return root.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

}  // namespace semnet
