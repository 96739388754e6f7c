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

#include "oracle.hpp"
#include "semnet/corpus.hpp"
#include "semnet/properties.hpp"
#include "semnet/validate.hpp"
#include "semnet/semnet_format.hpp"
#include "test_util.hpp"

namespace semnet {
namespace {

using testing_util::names_of;
using testing_util::random_network;

std::string serialize_for_trace(const Network& net) { return serialize(net); }

std::vector<Network> sample_networks() {
  std::vector<Network> nets = {corpus::t1(), corpus::t2(), corpus::t3(), corpus::t4(), corpus::t4b(),
                               corpus::t4_merge()};
  std::mt19937 rng(2026);
  for (int i = 0; i < 120; ++i) nets.push_back(random_network(rng));
  return nets;
}

std::vector<std::pair<Scope, Scope>> scope_pairs(const Engine& engine) {
  return {{data_scope(engine), sink_scope(engine)},
          {data_scope(engine), source_scope(engine)},
          {source_scope(engine), sink_scope(engine)}};
}

class OracleAgreement : public ::testing::TestWithParam<EngineKind> {};

INSTANTIATE_TEST_SUITE_P(Both, OracleAgreement, ::testing::Values(EngineKind::kJoin, EngineKind::kBruteForce),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST_P(OracleAgreement, ConsistentSpace) {
  for (const auto& net : sample_networks()) {
    Engine engine(net, GetParam());
    oracle::Reference ref(net);
    oracle::Family got;
    for (const auto& c : engine.completions(engine.empty_instance())) got.insert(testing_util::to_valuation(net, c));
    EXPECT_EQ(got, ref.hat()) << net.name;
  }
}

TEST_P(OracleAgreement, EveryProperty) {
  for (const auto& net : sample_networks()) {
    Engine engine(net, GetParam());
    oracle::Reference ref(net);
    for (const auto& [a, b] : scope_pairs(engine)) {
      const auto an = names_of(net, a);
      const auto bn = names_of(net, b);
      for (auto mode : {CountMode::kFull, CountMode::kProjected}) {
        const bool full = mode == CountMode::kFull;
        SCOPED_TRACE(serialize_for_trace(net) + " mode=" + std::string(to_string(mode)));
        EXPECT_EQ(check_functional(engine, a, b, mode).holds, ref.functional(an, bn, full));
        EXPECT_EQ(check_total(engine, a, b, mode).holds, ref.total(an, bn));
        EXPECT_EQ(check_injective(engine, a, b, mode).holds, ref.injective(an, bn, full));
        EXPECT_EQ(check_surjective(engine, a, b, mode).holds, ref.surjective(an, bn));
        std::vector<std::string> redundant;
        for (const auto& w : check_minimal(engine, a, b, mode).witnesses) redundant.push_back(w.note.substr(10));
        EXPECT_EQ(redundant, ref.redundant(an, bn, full));
        for (SetIndex s : b) {
          EXPECT_EQ(check_surjective_in(engine, s, a, b, mode).holds, ref.surjective_in(net.sets[s].id));
        }
      }
    }
  }
}

TEST(PropertyLaws, Duality) {
  for (const auto& net : sample_networks()) {
    Engine engine(net);
    for (const auto& [a, b] : scope_pairs(engine)) {
      for (auto mode : {CountMode::kFull, CountMode::kProjected}) {
        EXPECT_EQ(check_injective(engine, a, b, mode).holds, check_functional(engine, b, a, mode).holds) << net.name;
        EXPECT_EQ(check_surjective(engine, a, b, mode).holds, check_total(engine, b, a, mode).holds) << net.name;
      }
    }
  }
}

TEST(PropertyLaws, FullImpliesProjected) {
  for (const auto& net : sample_networks()) {
    Engine engine(net);
    for (const auto& [a, b] : scope_pairs(engine)) {
      if (check_functional(engine, a, b, CountMode::kFull).holds) {
        EXPECT_TRUE(check_functional(engine, a, b, CountMode::kProjected).holds) << net.name;
      }
      if (check_injective(engine, a, b, CountMode::kFull).holds) {
        EXPECT_TRUE(check_injective(engine, a, b, CountMode::kProjected).holds) << net.name;
      }
    }
  }
}

TEST(PropertyLaws, SurjectiveImpliesSurjectiveInEachTarget) {
  for (const auto& net : sample_networks()) {
    Engine engine(net);
    for (const auto& [a, b] : scope_pairs(engine)) {
      if (!check_surjective(engine, a, b, CountMode::kProjected).holds) continue;
      for (SetIndex s : b) {
        EXPECT_TRUE(check_surjective_in(engine, s, a, b, CountMode::kProjected).holds) << net.name;
      }
    }
  }
}

// A one-value set never distinguishes anything, so minimality needs two.
TEST(PropertyLaws, IdentityRelationHasEveryProperty) {
  for (int size = 2; size <= 4; ++size) {
    Network net{"Id", {{"A", {}}, {"B", {}}}, {{"id", {"A"}, {"B"}, {}}}, {"A"}};
    for (int v = 0; v < size; ++v) {
      const auto value = "v" + std::to_string(v);
      net.sets[0].values.push_back(value);
      net.sets[1].values.push_back(value);
      net.relations[0].rows.push_back({value, value});
    }
    Engine engine(net);
    for (auto dir : {Direction::kForward, Direction::kBackward}) {
      for (const auto& v : check_suite(engine, dir, CountMode::kProjected)) {
        EXPECT_TRUE(v.holds) << to_string(v.query.kind);
      }
    }
  }
}

TEST(PropertyLaws, MoreRowsNeverBreakTotality) {
  std::mt19937 rng(5);
  for (int i = 0; i < 80; ++i) {
    Network net = random_network(rng);
    if (net.relations.empty()) continue;
    Engine before(net);
    const Scope a = data_scope(before);
    const Scope b = sink_scope(before);
    const bool total = check_total(before, a, b, CountMode::kProjected).holds;
    const bool surjective = check_surjective(before, a, b, CountMode::kProjected).holds;

    // Add the complete product to one relation; consistency only grows.
    Network wider = net;
    auto& rel = wider.relations.front();
    oracle::Family product = oracle::instances(wider, rel.involved());
    const auto involved = rel.involved();
    rel.rows.clear();
    for (const auto& v : product) {
      std::vector<std::string> row;
      for (const auto& id : involved) row.push_back(v.at(id));
      rel.rows.push_back(row);
    }
    Engine after(wider);
    if (total) {
      EXPECT_TRUE(check_total(after, a, b, CountMode::kProjected).holds);
    }
    if (surjective) {
      EXPECT_TRUE(check_surjective(after, a, b, CountMode::kProjected).holds);
    }
  }
}

TEST(PropertyLaws, WorkerCountIndependence) {
  for (const auto& net : sample_networks()) {
    Engine engine(net);
    for (auto dir : {Direction::kForward, Direction::kBackward}) {
      const auto one = check_suite(engine, dir, CountMode::kFull, CheckOptions{1});
      const auto three = check_suite(engine, dir, CountMode::kFull, CheckOptions{3});
      ASSERT_EQ(one.size(), three.size());
      for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].holds, three[i].holds);
        EXPECT_EQ(one[i].instances_checked, three[i].instances_checked);
        ASSERT_EQ(one[i].witnesses.size(), three[i].witnesses.size());
        for (std::size_t w = 0; w < one[i].witnesses.size(); ++w) {
          EXPECT_EQ(one[i].witnesses[w].anchor, three[i].witnesses[w].anchor);
          EXPECT_EQ(one[i].witnesses[w].evidence, three[i].witnesses[w].evidence);
          EXPECT_EQ(one[i].witnesses[w].note, three[i].witnesses[w].note);
        }
      }
    }
  }
}

}  // namespace
}  // namespace semnet
