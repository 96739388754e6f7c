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

#include <json.hpp>

#include "semnet/corpus.hpp"
#include "semnet/report.hpp"

namespace semnet {
namespace {

TEST(RenderTextTest, FunctionalFailureShowsWitness) {
  Engine engine(corpus::t3());
  auto verdicts = check_suite(engine, Direction::kForward, CountMode::kFull);
  const auto text = render_text(engine.network(), verdicts);
  EXPECT_NE(text.find("FUNCTIONAL from={X} to={Y} mode=full : FAILS\n"), std::string::npos) << text;
  EXPECT_NE(text.find("  witness: {X=x1} -> [{X=x1, Y=y1}, {X=x1, Y=y2}] (multiple-outcomes)\n"), std::string::npos)
      << text;
}

TEST(RenderTextTest, SuiteOnSingleSet) {
  Engine engine(corpus::t1());
  const auto text = render_text(engine.network(), check_suite(engine, Direction::kForward, CountMode::kProjected));
  EXPECT_EQ(text,
            "FUNCTIONAL from={A} to={A} mode=projected : HOLDS\n"
            "TOTAL from={A} to={A} mode=projected : HOLDS\n"
            "INJECTIVE from={A} to={A} mode=projected : HOLDS\n"
            "SURJECTIVE from={A} to={A} mode=projected : HOLDS\n"
            "MINIMAL from={A} to={A} mode=projected : HOLDS\n"
            "SURJECTIVE_IN(A) from={A} to={A} mode=projected : HOLDS\n");
}

TEST(RenderTextTest, EmptyList) { EXPECT_EQ(render_text(corpus::t1(), {}), ""); }

TEST(RenderJsonTest, InjectiveWitness) {
  Engine engine(corpus::t2());
  const auto& net = engine.network();
  auto v = check_injective(engine, data_scope(engine), sink_scope(engine), CountMode::kProjected);
  const auto text = render_json(net, {net.name, Direction::kForward, CountMode::kProjected, {v}});
  ASSERT_TRUE(text.ends_with("}\n"));
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["network"], "T2");
  EXPECT_EQ(doc["direction"], "forward");
  EXPECT_EQ(doc["mode"], "projected");
  const auto& verdict = doc["verdicts"][0];
  EXPECT_EQ(verdict["property"], "INJECTIVE");
  EXPECT_EQ(verdict["holds"], false);
  EXPECT_TRUE(verdict["param"].is_null());
  EXPECT_EQ(verdict["from"], nlohmann::json::array({"X"}));
  EXPECT_EQ(verdict["witnesses"][0]["anchor"], (nlohmann::json{{"Y", "y1"}}));
  EXPECT_EQ(verdict["witnesses"][0]["evidence"].size(), 2u);
  EXPECT_EQ(verdict["instances_checked"], 1);
}

TEST(RenderJsonTest, KeysAreExactAndSorted) {
  Engine engine(corpus::t2());
  const auto& net = engine.network();
  const auto verdicts = check_suite(engine, Direction::kForward, CountMode::kProjected);
  const auto text = render_json(net, {net.name, Direction::kForward, CountMode::kProjected, verdicts});
  const auto doc = nlohmann::json::parse(text);
  std::vector<std::string> top;
  for (const auto& [k, _] : doc.items()) top.push_back(k);
  EXPECT_EQ(top, (std::vector<std::string>{"direction", "mode", "network", "verdicts"}));
  std::vector<std::string> keys;
  for (const auto& [k, _] : doc["verdicts"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"from", "holds", "instances_checked", "param", "property", "to",
                                            "witnesses"}));
  EXPECT_EQ(doc["verdicts"][5]["param"], "Y");
  // Two-space indentation, stable across calls.
  EXPECT_NE(text.find("\n  \"direction\""), std::string::npos);
  EXPECT_EQ(text, render_json(net, {net.name, Direction::kForward, CountMode::kProjected, verdicts}));
}

}  // namespace
}  // namespace semnet
