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

// The .semnet network-definition format. Line oriented; `#` starts a comment
// that runs to the end of the line; blank lines are ignored.
//
//   net <id>                              exactly once, first statement
//   set <id> = <value> <value> ...
//   rel <id> in <set-id>... out <set-id>...
//     row <value>...                      in-sets first, then out-sets
//   end
//   data <set-id>...                      at most once; defaults to the sources
//
// Identifiers match [A-Za-z_][A-Za-z0-9_-]* and must be declared before use.
// Values are bare tokens [A-Za-z0-9_.+-]+ or double-quoted strings with \"
// and \\ escapes; a value containing `#` therefore has to be quoted.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semnet/network.hpp"
#include "semnet/validate.hpp"

namespace semnet {

struct Location {
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

struct ParseError {
  std::string code;
  std::string message;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct SourceSpans {
  Location net;
  std::map<std::string, Location> sets;
  std::map<std::string, Location> relations;
  std::optional<Location> data;
};

struct SemnetDocument {
  Network network;
  SourceSpans spans;
};

/// Either a document or a non-empty error list, never both.
struct ParseResult {
  std::optional<SemnetDocument> document;
  std::vector<ParseError> errors;

  bool ok() const { return document.has_value(); }
};

inline bool is_bare_value(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '.' || c == '+' || c == '-';
    if (!ok) return false;
  }
  return true;
}

namespace detail {

struct Token {
  enum class Kind { kBare, kQuoted, kEquals };
  Kind kind;
  std::string text;
  std::size_t column;
};

class Parser {
 public:
  ParseResult run(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      if (line.ends_with('\r')) line.remove_suffix(1);
      ++line_no;
      if (auto tokens = tokenize(line, line_no); tokens && !tokens->empty()) statement(*tokens, line_no);
      pos = eol + 1;
    }

    if (rel_) fail("UNTERMINATED_REL", "relation '" + rel_->rel.id + "' has no 'end'", rel_->loc);
    if (!seen_net_ && !missing_net_reported_) fail("MISSING_NET", "file has no 'net' statement", {1, 1});

    ParseResult result;
    if (!errors_.empty()) {
      result.errors = std::move(errors_);
      return result;
    }
    if (!data_seen_) net_.data_selection = sources(net_);
    result.document = SemnetDocument{std::move(net_), std::move(spans_)};
    return result;
  }

 private:
  struct OpenRelation {
    Relation rel;
    Location loc;
    bool header_ok = true;
    std::vector<const ValueSet*> columns;
  };

  void fail(std::string code, std::string message, Location loc) {
    errors_.push_back({std::move(code), std::move(message), loc.line, loc.column});
  }

  std::optional<std::vector<Token>> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (c == ' ' || c == '\t') {
        ++i;
      } else if (c == '#') {
        break;
      } else if (c == '=') {
        tokens.push_back({Token::Kind::kEquals, "=", i + 1});
        ++i;
      } else if (c == '"') {
        const std::size_t start = i;
        std::string text;
        bool closed = false;
        ++i;
        while (i < line.size()) {
          if (line[i] == '\\') {
            if (i + 1 < line.size() && (line[i + 1] == '"' || line[i + 1] == '\\')) {
              text += line[i + 1];
              i += 2;
              continue;
            }
            fail("BAD_ESCAPE", "only \\\" and \\\\ escapes are allowed", {line_no, i + 1});
            return std::nullopt;
          }
          if (line[i] == '"') {
            closed = true;
            ++i;
            break;
          }
          text += line[i++];
        }
        if (!closed) {
          fail("UNTERMINATED_STRING", "string is not closed before end of line", {line_no, start + 1});
          return std::nullopt;
        }
        if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') {
          fail("SYNTAX", "expected whitespace after string", {line_no, i + 1});
          return std::nullopt;
        }
        tokens.push_back({Token::Kind::kQuoted, std::move(text), start + 1});
      } else if (is_bare_value(std::string_view(&c, 1))) {
        const std::size_t start = i;
        while (i < line.size() && is_bare_value(line.substr(i, 1))) ++i;
        tokens.push_back({Token::Kind::kBare, std::string(line.substr(start, i - start)), start + 1});
      } else {
        fail("BAD_CHARACTER", "unexpected character", {line_no, i + 1});
        return std::nullopt;
      }
    }
    return tokens;
  }

  bool expect_identifier(const Token& tok, std::size_t line_no, bool set_id) {
    if (tok.kind != Token::Kind::kBare || !is_identifier(tok.text) || (set_id && is_reserved_set_id(tok.text))) {
      fail("BAD_IDENTIFIER", "'" + tok.text + "' is not a valid identifier here", {line_no, tok.column});
      return false;
    }
    return true;
  }

  bool expect_value(const Token& tok, std::size_t line_no) {
    if (tok.kind == Token::Kind::kEquals) {
      fail("SYNTAX", "unexpected '='", {line_no, tok.column});
      return false;
    }
    return true;
  }

  const ValueSet* resolve(const Token& tok, std::size_t line_no) {
    if (!expect_identifier(tok, line_no, true)) return nullptr;
    for (const auto& set : net_.sets) {
      if (set.id == tok.text) return &set;
    }
    fail("UNKNOWN_SET", "set '" + tok.text + "' is not declared", {line_no, tok.column});
    return nullptr;
  }

  void statement(const std::vector<Token>& tokens, std::size_t line_no) {
    const Token& head = tokens.front();
    const Location loc{line_no, head.column};
    if (head.kind != Token::Kind::kBare) {
      fail("SYNTAX", "statement must start with a keyword", loc);
      return;
    }
    const std::string& kw = head.text;

    if (rel_) {
      if (kw == "row") return row(tokens, line_no);
      if (kw == "end") {
        if (tokens.size() > 1) fail("SYNTAX", "'end' takes no arguments", {line_no, tokens[1].column});
        finish_relation();
        return;
      }
      fail("SYNTAX", "expected 'row' or 'end' inside relation '" + rel_->rel.id + "'", loc);
      return;
    }

    if (kw == "net") return net(tokens, line_no);
    if (!seen_net_ && !missing_net_reported_) {
      fail("MISSING_NET", "'net' must be the first statement", loc);
      missing_net_reported_ = true;
    }
    if (kw == "set") return set(tokens, line_no);
    if (kw == "rel") return rel(tokens, line_no);
    if (kw == "data") return data(tokens, line_no);
    if (kw == "row" || kw == "end") {
      fail("SYNTAX", "'" + kw + "' outside a relation block", loc);
      return;
    }
    fail("UNKNOWN_STATEMENT", "unknown statement '" + kw + "'", loc);
  }

  void net(const std::vector<Token>& tokens, std::size_t line_no) {
    const Location loc{line_no, tokens[0].column};
    if (seen_net_) {
      fail("DUPLICATE_NET", "'net' appears more than once", loc);
      return;
    }
    if (statements_ > 0 && !missing_net_reported_) fail("MISSING_NET", "'net' must be the first statement", loc);
    seen_net_ = true;
    ++statements_;
    if (tokens.size() != 2) {
      fail("SYNTAX", "expected 'net <id>'", loc);
      return;
    }
    if (!expect_identifier(tokens[1], line_no, false)) return;
    net_.name = tokens[1].text;
    spans_.net = loc;
  }

  void set(const std::vector<Token>& tokens, std::size_t line_no) {
    ++statements_;
    const Location loc{line_no, tokens[0].column};
    if (tokens.size() < 3 || tokens[2].kind != Token::Kind::kEquals) {
      fail("SYNTAX", "expected 'set <id> = <value>...'", loc);
      return;
    }
    if (!expect_identifier(tokens[1], line_no, true)) return;
    ValueSet vs{tokens[1].text, {}};
    bool ok = true;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      ok = expect_value(tokens[i], line_no) && ok;
      vs.values.push_back(tokens[i].text);
    }
    if (spans_.sets.contains(vs.id)) {
      fail("DUPLICATE_ID", "set '" + vs.id + "' is already declared", {line_no, tokens[1].column});
      return;
    }
    if (!ok) return;
    spans_.sets.emplace(vs.id, Location{line_no, tokens[1].column});
    net_.sets.push_back(std::move(vs));
  }

  void rel(const std::vector<Token>& tokens, std::size_t line_no) {
    ++statements_;
    OpenRelation open;
    open.loc = {line_no, tokens[0].column};
    if (tokens.size() < 2 || !expect_identifier(tokens[1], line_no, false)) {
      if (tokens.size() < 2) fail("SYNTAX", "expected 'rel <id> in ... out ...'", open.loc);
      open.header_ok = false;
      rel_ = std::move(open);
      return;
    }
    open.rel.id = tokens[1].text;
    if (spans_.relations.contains(open.rel.id) || opened_.contains(open.rel.id)) {
      fail("DUPLICATE_ID", "relation '" + open.rel.id + "' is already declared", {line_no, tokens[1].column});
      open.header_ok = false;
    }
    opened_.insert(open.rel.id);

    if (tokens.size() < 3 || tokens[2].kind != Token::Kind::kBare || tokens[2].text != "in") {
      fail("SYNTAX", "expected 'in' after relation id", {line_no, tokens.size() < 3 ? tokens[1].column : tokens[2].column});
      open.header_ok = false;
      rel_ = std::move(open);
      return;
    }
    bool output = false;
    bool saw_out = false;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      const Token& tok = tokens[i];
      if (tok.kind == Token::Kind::kBare && tok.text == "out") {
        if (saw_out) {
          fail("SYNTAX", "'out' appears twice", {line_no, tok.column});
          open.header_ok = false;
        }
        saw_out = output = true;
        continue;
      }
      const ValueSet* set = resolve(tok, line_no);
      if (!set) {
        open.header_ok = false;
        continue;
      }
      (output ? open.rel.out_sets : open.rel.in_sets).push_back(set->id);
    }
    if (!saw_out) {
      fail("SYNTAX", "relation header needs an 'out' list", open.loc);
      open.header_ok = false;
    }
    if (open.header_ok) {
      for (const auto& id : open.rel.involved()) open.columns.push_back(&net_.sets[*net_.find_set(id)]);
    }
    rel_ = std::move(open);
  }

  void row(const std::vector<Token>& tokens, std::size_t line_no) {
    const Location loc{line_no, tokens[0].column};
    std::vector<std::string> values;
    bool ok = true;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      ok = expect_value(tokens[i], line_no) && ok;
      values.push_back(tokens[i].text);
    }
    if (!ok || !rel_->header_ok) return;
    if (values.size() != rel_->columns.size()) {
      fail("ROW_ARITY", "row has " + std::to_string(values.size()) + " values, relation '" + rel_->rel.id +
                            "' needs " + std::to_string(rel_->columns.size()), loc);
      return;
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
      const auto& domain = rel_->columns[k]->values;
      if (std::find(domain.begin(), domain.end(), values[k]) == domain.end()) {
        fail("UNKNOWN_VALUE", "value '" + values[k] + "' is not in set '" + rel_->columns[k]->id + "'",
             {line_no, tokens[k + 1].column});
        ok = false;
      }
    }
    if (ok) rel_->rel.rows.push_back(std::move(values));
  }

  void finish_relation() {
    if (rel_->header_ok) {
      spans_.relations.emplace(rel_->rel.id, rel_->loc);
      net_.relations.push_back(std::move(rel_->rel));
    }
    rel_.reset();
  }

  void data(const std::vector<Token>& tokens, std::size_t line_no) {
    ++statements_;
    const Location loc{line_no, tokens[0].column};
    if (data_seen_) {
      fail("DUPLICATE_DATA", "'data' appears more than once", loc);
      return;
    }
    data_seen_ = true;
    spans_.data = loc;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (const ValueSet* set = resolve(tokens[i], line_no)) net_.data_selection.push_back(set->id);
    }
  }

  Network net_;
  SourceSpans spans_;
  std::vector<ParseError> errors_;
  std::optional<OpenRelation> rel_;
  std::set<std::string> opened_;
  std::size_t statements_ = 0;
  bool seen_net_ = false;
  bool missing_net_reported_ = false;
  bool data_seen_ = false;
};

inline std::string quote_value(std::string_view value) {
  if (is_bare_value(value)) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// Parses a whole file. Total: any byte sequence yields either a document or
/// errors carrying 1-based line numbers.
inline ParseResult parse(std::string_view text) { return detail::Parser{}.run(text); }

/// Canonical text for a validated network: net, sets, relations, then an
/// explicit data statement; LF line endings with a trailing newline.
inline std::string serialize(const Network& net) {
  std::string out = "net " + net.name + "\n";
  for (const auto& set : net.sets) {
    out += "set " + set.id + " =";
    for (const auto& value : set.values) out += " " + detail::quote_value(value);
    out += "\n";
  }
  for (const auto& rel : net.relations) {
    out += "rel " + rel.id + " in";
    for (const auto& id : rel.in_sets) out += " " + id;
    out += " out";
    for (const auto& id : rel.out_sets) out += " " + id;
    out += "\n";
    for (const auto& row : rel.rows) {
      out += "  row";
      for (const auto& value : row) out += " " + detail::quote_value(value);
      out += "\n";
    }
    out += "end\n";
  }
  out += "data";
  for (const auto& id : net.data_selection) out += " " + id;
  out += "\n";
  return out;
}

}  // namespace semnet
