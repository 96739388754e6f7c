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

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semnet/engine.hpp"
#include "semnet/properties.hpp"
#include "semnet/report.hpp"
#include "semnet/semnet_format.hpp"
#include "semnet/validate.hpp"

namespace semnet::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFails = 1,
  kUsage = 2,
  kInvalid = 3,
  kLimit = 4,
};

struct CliConfig {
  std::string subcommand;
  std::string file;
  std::string property = "all";
  std::string direction = "forward";
  std::vector<std::string> from;
  std::vector<std::string> to;
  std::string mode = "projected";
  std::string param;
  std::string engine = "join";
  std::uint64_t max_enumerated = Limits{}.max_enumerated;
  unsigned jobs = 1;
  bool json = false;
};

namespace detail {

inline std::string where(const SemnetDocument& doc, const Issue& issue) {
  std::optional<Location> loc;
  if (issue.location.starts_with("set ")) {
    if (auto it = doc.spans.sets.find(issue.location.substr(4)); it != doc.spans.sets.end()) loc = it->second;
  } else if (issue.location.starts_with("rel ")) {
    auto id = issue.location.substr(4);
    id = id.substr(0, id.find(' '));
    if (auto it = doc.spans.relations.find(id); it != doc.spans.relations.end()) loc = it->second;
  } else if (issue.location == "data") {
    loc = doc.spans.data;
  } else if (issue.location == "net") {
    loc = doc.spans.net;
  }
  std::string out = issue.location;
  if (loc) out += " (line " + std::to_string(loc->line) + ")";
  return out;
}

// Reads and parses; on failure prints diagnostics and returns the exit code.
inline std::optional<SemnetDocument> load(const std::string& file, std::ostream& err, int& code) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << file << "'\n";
    code = kUsage;
    return std::nullopt;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto parsed = parse(buffer.str());
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) {
      err << file << ":" << e.line << ":" << e.column << ": " << e.code << ": " << e.message << "\n";
    }
    code = kUsage;
    return std::nullopt;
  }
  return std::move(*parsed.document);
}

inline void print_issues(const SemnetDocument& doc, const ValidationReport& report, std::ostream& os) {
  for (const auto& e : report.errors) os << "error " << e.code << " at " << where(doc, e) << ": " << e.message << "\n";
  for (const auto& w : report.warnings) os << "warning " << w.code << " at " << where(doc, w) << ": " << w.message << "\n";
}

inline std::string joined(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline int run_validate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto doc = load(cfg.file, err, code);
  if (!doc) return code;
  auto report = validate(doc->network);
  print_issues(*doc, report, out);
  out << (report.ok() ? "valid" : "invalid") << ": " << report.errors.size() << " error(s), "
      << report.warnings.size() << " warning(s)\n";
  return report.ok() ? kOk : kInvalid;
}

inline int run_info(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto doc = load(cfg.file, err, code);
  if (!doc) return code;
  auto report = validate(doc->network);
  if (!report.ok()) {
    print_issues(*doc, report, err);
    return kInvalid;
  }
  const Network& net = doc->network;
  Engine engine(net);
  const auto flags = structural_flags(net);
  out << "network " << net.name << "\n";
  out << "sets:\n";
  for (const auto& set : net.sets) {
    out << "  " << set.id << " (" << set.values.size() << "):";
    for (const auto& v : set.values) out << " " << semnet::detail::quote_value(v);
    out << "\n";
  }
  out << "relations:\n";
  for (const auto& rel : net.relations) {
    out << "  " << rel.id << " in " << joined(rel.in_sets) << (rel.in_sets.empty() ? "" : " ") << "out "
        << joined(rel.out_sets) << ": arity " << rel.in_sets.size() + rel.out_sets.size() << ", " << rel.rows.size()
        << " row(s)\n";
  }
  out << "sources: " << joined(sources(net)) << "\n";
  out << "sinks: " << joined(sinks(net)) << "\n";
  out << "data: " << joined(net.data_selection) << "\n";
  out << "acyclic: " << (flags.is_acyclic ? "yes" : "no") << "\n";
  out << "contiguous: " << (flags.is_contiguous ? "yes" : "no") << "\n";
  out << "full space: " << engine.space_size(engine.all_sets()) << "\n";
  return kOk;
}

inline std::optional<PropertyKind> property_kind(const std::string& name) {
  static const std::map<std::string, PropertyKind> kinds = {
      {"functional", PropertyKind::kFunctional}, {"total", PropertyKind::kTotal},
      {"injective", PropertyKind::kInjective},   {"surjective", PropertyKind::kSurjective},
      {"surjective-in", PropertyKind::kSurjectiveIn}, {"minimal", PropertyKind::kMinimal},
  };
  if (auto it = kinds.find(name); it != kinds.end()) return it->second;
  return std::nullopt;
}

inline int run_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto kind = property_kind(cfg.property);
  if (cfg.property != "all" && !kind) {
    err << "error: unknown property '" << cfg.property << "'\n";
    return kUsage;
  }
  if (!cfg.param.empty() && kind != PropertyKind::kSurjectiveIn) {
    err << "error: --param is only valid with --property surjective-in\n";
    return kUsage;
  }
  if (kind == PropertyKind::kSurjectiveIn && cfg.param.empty()) {
    err << "error: --property surjective-in needs --param\n";
    return kUsage;
  }
  if (cfg.jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return kUsage;
  }

  int code = kOk;
  auto doc = load(cfg.file, err, code);
  if (!doc) return code;
  auto report = validate(doc->network);
  if (!report.ok()) {
    print_issues(*doc, report, err);
    return kInvalid;
  }

  const Direction direction = cfg.direction == "backward" ? Direction::kBackward : Direction::kForward;
  const CountMode mode = cfg.mode == "full" ? CountMode::kFull : CountMode::kProjected;
  const EngineKind engine_kind = cfg.engine == "bruteforce" ? EngineKind::kBruteForce : EngineKind::kJoin;
  Engine engine(doc->network, engine_kind, Limits{cfg.max_enumerated, std::nullopt});
  const CheckOptions options{cfg.jobs};

  std::optional<Scope> from;
  std::optional<Scope> to;
  std::optional<SetIndex> param;
  try {
    if (!cfg.from.empty()) from = engine.scope_of(cfg.from);
    if (!cfg.to.empty()) to = engine.scope_of(cfg.to);
    if (!cfg.param.empty()) param = doc->network.set_index(cfg.param);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::vector<Verdict> verdicts;
  try {
    if (!kind) {
      verdicts = check_suite(engine, direction, mode, options, from, to);
    } else {
      PropertyQuery query;
      query.kind = *kind;
      query.mode = mode;
      query.from = from ? *from : data_scope(engine);
      query.to = to ? *to : (direction == Direction::kForward ? sink_scope(engine) : source_scope(engine));
      query.param = param;
      if (param && !query.to.contains(*param)) {
        err << "error: --param " << cfg.param << " is not in the target scope " << to_string(doc->network, query.to)
            << "\n";
        return kUsage;
      }
      verdicts.push_back(check(engine, query, options));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kLimitExceeded ? kLimit : kUsage;
  }

  if (cfg.json) {
    out << render_json(doc->network, ReportDocument{doc->network.name, direction, mode, verdicts});
  } else {
    out << render_text(doc->network, verdicts);
  }
  const bool all_hold = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
  return all_hold ? kOk : kPropertyFails;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Decide data-set properties of notation semantics networks", "semnet"};
  app.require_subcommand(1);

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a .semnet file");
  validate_cmd->add_option("FILE", cfg.file, "Network definition")->required();

  auto* info_cmd = app.add_subcommand("info", "Summarize a .semnet file");
  info_cmd->add_option("FILE", cfg.file, "Network definition")->required();

  auto* check_cmd = app.add_subcommand("check", "Check data-set properties");
  check_cmd->add_option("FILE", cfg.file, "Network definition")->required();
  check_cmd->add_option("--property", cfg.property, "functional|total|injective|surjective|surjective-in|minimal|all")
      ->check(CLI::IsMember({"functional", "total", "injective", "surjective", "surjective-in", "minimal", "all"}));
  check_cmd->add_option("--direction", cfg.direction, "forward|backward")
      ->check(CLI::IsMember({"forward", "backward"}));
  check_cmd->add_option("--from", cfg.from, "Quantified sets (default: data selection)")->delimiter(',');
  check_cmd->add_option("--to", cfg.to, "Target sets (default: sinks / sources)")->delimiter(',');
  check_cmd->add_option("--mode", cfg.mode, "projected|full")->check(CLI::IsMember({"projected", "full"}));
  check_cmd->add_option("--param", cfg.param, "Parameter set for surjective-in");
  check_cmd->add_option("--engine", cfg.engine, "join|bruteforce")->check(CLI::IsMember({"join", "bruteforce"}));
  check_cmd->add_option("--max-instances", cfg.max_enumerated, "Largest candidate space per enumeration")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--json", cfg.json, "Machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "validate") return detail::run_validate(cfg, out, err);
  if (cfg.subcommand == "info") return detail::run_info(cfg, out, err);
  return detail::run_check(cfg, out, err);
}

}  // namespace semnet::cli
