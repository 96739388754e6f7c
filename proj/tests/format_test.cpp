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

#include <gtest/gtest.h>

#include <random>

#include "semnet/corpus.hpp"
#include "semnet/semnet_format.hpp"
#include "test_util.hpp"

namespace semnet {
namespace {

constexpr const char* kT2Text = R"(net T2
set X = x1 x2
set Y = y1 y2
rel f in X out Y
  row x1 y1
  row x2 y1
end
data X
)";

ParseError only_error(std::string_view text) {
  auto result = parse(text);
  EXPECT_FALSE(result.ok());
  EXPECT_FALSE(result.errors.empty());
  return result.errors.empty() ? ParseError{} : result.errors.front();
}

TEST(ParseTest, T2Transcription) {
  auto result = parse(kT2Text);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result.document->network, corpus::t2());
  EXPECT_EQ(result.document->spans.net, (Location{1, 1}));
  EXPECT_EQ(result.document->spans.relations.at("f"), (Location{4, 1}));
}

TEST(ParseTest, RowArity) {
  auto e = only_error("net N\nset X = x1\nset Y = y1\nrel f in X out Y\n  row x1\nend\n");
  EXPECT_EQ(e.code, "ROW_ARITY");
  EXPECT_EQ(e.line, 5u);
}

TEST(ParseTest, DataDefaultsToSources) {
  auto result = parse("net T4\nset X = x1 x2\nset M = m1 m2\nset Y = y1 y2\n"
                      "rel f in X out M\nrow x1 m1\nrow x2 m2\nend\nrel g in M out Y\nrow m1 y1\nrow m2 y2\nend\n");
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result.document->network.data_selection, std::vector<std::string>{"X"});
  EXPECT_EQ(result.document->network, corpus::t4());
}

TEST(ParseTest, CommentsQuotesAndLineEndings) {
  auto result = parse("\xEF\xBB\xBFnet N # name\r\n\r\nset P = \"c#4\" \"a \\\"b\\\"\" \"x\\\\y\"\r\ndata P\r\n");
  ASSERT_TRUE(result.ok()) << result.errors.front().code;
  EXPECT_EQ(result.document->network.sets[0].values, (std::vector<std::string>{"c#4", "a \"b\"", "x\\y"}));
}

TEST(ParseTest, ErrorCodesCarryPositions) {
  struct Case {
    const char* text;
    const char* code;
    std::size_t line;
  };
  const Case cases[] = {
      {"set X = a\n", "MISSING_NET", 1},
      {"net N\nnet M\n", "DUPLICATE_NET", 2},
      {"net N\nset 9x = a\n", "BAD_IDENTIFIER", 2},
      {"net N\nset in = a\n", "BAD_IDENTIFIER", 2},
      {"net N\nset X = a\nset X = b\n", "DUPLICATE_ID", 3},
      {"net N\nrel f in X out Y\nend\n", "UNKNOWN_SET", 2},
      {"net N\nset X = a\nset Y = b\nrel f in X out Y\nrow a c\nend\n", "UNKNOWN_VALUE", 5},
      {"net N\nset X = a\nset Y = b\nrel f in X out Y\nrow a b\n", "UNTERMINATED_REL", 4},
      {"net N\nset X = a\ndata X\ndata X\n", "DUPLICATE_DATA", 4},
      {"net N\nwhatever X\n", "UNKNOWN_STATEMENT", 2},
      {"net N\nset X = \"abc\n", "UNTERMINATED_STRING", 2},
      {"net N\nset X = \"a\\n\"\n", "BAD_ESCAPE", 2},
      {"net N\nset X = a;\n", "BAD_CHARACTER", 2},
      {"net N\nrow a\n", "SYNTAX", 2},
      {"", "MISSING_NET", 1},
  };
  for (const auto& c : cases) {
    auto result = parse(c.text);
    ASSERT_FALSE(result.ok()) << c.text;
    const auto& e = result.errors.front();
    EXPECT_EQ(e.code, c.code) << c.text;
    EXPECT_EQ(e.line, c.line) << c.text;
    EXPECT_GE(e.column, 1u);
  }
}

TEST(ParseTest, BadCharacterColumn) {
  auto e = only_error("net N\nset X = ab @\n");
  EXPECT_EQ(e.column, 12u);
}

TEST(SerializeTest, QuotesOnlyWhenNeeded) {
  Network net{"N", {{"P", {"c#4", "d4", "", "a\"b"}}}, {}, {"P"}};
  const auto text = serialize(net);
  EXPECT_EQ(text, "net N\nset P = \"c#4\" d4 \"\" \"a\\\"b\"\ndata P\n");
  auto back = parse(text);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back.document->network, net);
}

TEST(SerializeTest, EmptyDataSelection) {
  Network net = corpus::t1();
  net.data_selection.clear();
  const auto text = serialize(net);
  EXPECT_TRUE(text.ends_with("\ndata\n"));
  auto back = parse(text);
  ASSERT_TRUE(back.ok());
  EXPECT_TRUE(back.document->network.data_selection.empty());
}

TEST(SerializeTest, RoundTripOnBuilders) {
  std::vector<Network> nets;
  for (const auto& e : corpus::entries()) nets.push_back(e.network);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) nets.push_back(testing_util::random_network(rng));
  for (const auto& net : nets) {
    const auto text = serialize(net);
    auto parsed = parse(text);
    ASSERT_TRUE(parsed.ok()) << text;
    EXPECT_EQ(parsed.document->network, net);
    EXPECT_EQ(serialize(parsed.document->network), text);
  }
}

TEST(ParseTest, NeverCrashesOnMutations) {
  const std::string base = serialize(corpus::t4());
  const std::string alphabet = "netsrowdaiu=\"\\# \n\r\tXYM12_-.;@";
  std::mt19937 rng(99);
  for (int i = 0; i < 3000; ++i) {
    std::string text = base;
    const int edits = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int k = 0; k < edits; ++k) {
      const auto pos = std::uniform_int_distribution<std::size_t>(0, text.size())(rng);
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: text.insert(pos, 1, alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]); break;
        case 1: if (pos < text.size()) text.erase(pos, 1); break;
        default: if (pos < text.size()) text[pos] = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng)); break;
      }
    }
    auto result = parse(text);
    EXPECT_NE(result.ok(), !result.errors.empty());
    const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
    for (const auto& e : result.errors) {
      EXPECT_GE(e.line, 1u);
      EXPECT_LE(e.line, lines);
    }
  }
}

}  // namespace
}  // namespace semnet
