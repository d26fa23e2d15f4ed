// Copyright 2026 The efgsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "efg/strategy.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "efg/bully_model.hpp"
#include "support/oracle.hpp"
#include "support/random_trees.hpp"

namespace {

using namespace efg;

std::vector<std::string> labels_of(const std::vector<PureStrategy>& strategies) {
  std::vector<std::string> out;
  for (const PureStrategy& s : strategies) out.push_back(s.label);
  return out;
}

TEST_CASE("victim strategies enumerate as IR ID ER ED") {
  GameTree g = baseline_game();
  std::vector<PureStrategy> strategies = enumerate_strategies(g, 0);
  CHECK(labels_of(strategies) == std::vector<std::string>{"IR", "ID", "ER", "ED"});
  CHECK(strategies[3].assignment ==
        std::map<InfosetId, std::string>{{"v.stage1", "E"}, {"v.stage3", "D"}});
}

TEST_CASE("bully strategies enumerate as Wr Wd Er Ed") {
  GameTree g = baseline_game();
  CHECK(labels_of(enumerate_strategies(g, 1)) ==
        std::vector<std::string>{"Wr", "Wd", "Er", "Ed"});
}

TEST_CASE("single decision node yields its two actions as strategies") {
  GameTree g;
  g.players = {{0, "p0"}, {1, "p1"}};
  g.root = "n0";
  g.nodes.emplace("n0", Node::decision("n0", 0, {{"A", "tA"}, {"B", "tB"}}));
  g.nodes.emplace("tA", Node::terminal("tA", {1.0, 0.0}));
  g.nodes.emplace("tB", Node::terminal("tB", {0.0, 1.0}));
  g.infosets = {{"i0", 0, {"n0"}}};
  CHECK(labels_of(enumerate_strategies(g, 0)) == std::vector<std::string>{"A", "B"});
  // Player 1 has no information sets: exactly one empty strategy.
  std::vector<PureStrategy> other = enumerate_strategies(g, 1);
  REQUIRE(other.size() == 1);
  CHECK(other[0].label.empty());
  CHECK(other[0].assignment.empty());
}

TEST_CASE("unknown player is rejected") {
  CHECK_THROWS_AS(enumerate_strategies(baseline_game(), 2), Error);
}

TEST_CASE("strategy count is the product of action counts") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    GameTree g = testsupport::random_tree(rng);
    for (int player = 0; player < 2; ++player) {
      std::size_t expected = 1;
      for (const Infoset* is : ordered_infosets(g, player)) {
        expected *= g.node(is->members.front()).actions.size();
      }
      CHECK(enumerate_strategies(g, player).size() == expected);
    }
  }
}

TEST_CASE("strategy labels are unique within a player") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    GameTree g = testsupport::random_tree(rng);
    for (int player = 0; player < 2; ++player) {
      std::vector<std::string> ls = labels_of(enumerate_strategies(g, player));
      std::set<std::string> unique(ls.begin(), ls.end());
      CHECK(unique.size() == ls.size());
    }
  }
}

TEST_CASE("baseline normal form matches the published table values") {
  NormalFormGame nf = induce_normal_form(baseline_game());
  REQUIRE(nf.rows() == 4);
  REQUIRE(nf.cols() == 4);

  // Rows IR and ID are constant (-10, 10).
  for (int r : {0, 1}) {
    for (int c = 0; c < 4; ++c) {
      CHECK(nf.payoffs[r][c] == std::array<double, 2>{-10.0, 10.0});
    }
  }
  auto cell = [&nf](const std::string& row, const std::string& col) {
    int r = -1;
    int c = -1;
    for (int i = 0; i < 4; ++i) {
      if (nf.row_strategies[i].label == row) r = i;
      if (nf.col_strategies[i].label == col) c = i;
    }
    REQUIRE(r >= 0);
    REQUIRE(c >= 0);
    return nf.payoffs[r][c];
  };
  CHECK(cell("ER", "Er") == std::array<double, 2>{-20.0, -20.0});
  CHECK(cell("ER", "Wr") == std::array<double, 2>{30.0, -30.0});
  CHECK(cell("ER", "Ed") == std::array<double, 2>{-100.0, -100.0});
  CHECK(cell("ED", "Ed") == std::array<double, 2>{-100.0, -100.0});
  CHECK(cell("ED", "Wd") == std::array<double, 2>{30.0, -30.0});
}

TEST_CASE("attrition stage alone induces the published 2x2 table") {
  GameTree stage = extract_subgame(baseline_game(), "v3");
  NormalFormGame nf = induce_normal_form(stage);
  REQUIRE(nf.rows() == 2);
  REQUIRE(nf.cols() == 2);
  CHECK(labels_of(nf.row_strategies) == std::vector<std::string>{"R", "D"});
  CHECK(labels_of(nf.col_strategies) == std::vector<std::string>{"r", "d"});
  CHECK(nf.payoffs[0][0] == std::array<double, 2>{-20.0, -20.0});
  CHECK(nf.payoffs[0][1] == std::array<double, 2>{-100.0, -100.0});
  CHECK(nf.payoffs[1][0] == std::array<double, 2>{-100.0, -100.0});
  CHECK(nf.payoffs[1][1] == std::array<double, 2>{-100.0, -100.0});
}

TEST_CASE("single-decision-node game induces a 2x1 matrix of leaf payoffs") {
  GameTree g;
  g.players = {{0, "p0"}, {1, "p1"}};
  g.root = "n0";
  g.nodes.emplace("n0", Node::decision("n0", 0, {{"A", "tA"}, {"B", "tB"}}));
  g.nodes.emplace("tA", Node::terminal("tA", {1.0, -1.0}));
  g.nodes.emplace("tB", Node::terminal("tB", {2.0, -2.0}));
  g.infosets = {{"i0", 0, {"n0"}}};
  NormalFormGame nf = induce_normal_form(g);
  REQUIRE(nf.rows() == 2);
  REQUIRE(nf.cols() == 1);
  CHECK(nf.payoffs[0][0] == std::array<double, 2>{1.0, -1.0});
  CHECK(nf.payoffs[1][0] == std::array<double, 2>{2.0, -2.0});
}

TEST_CASE("every normal-form cell is reproducible by playout") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    GameTree g = testsupport::random_tree(rng);
    NormalFormGame nf = induce_normal_form(g);
    for (int r = 0; r < nf.rows(); ++r) {
      for (int c = 0; c < nf.cols(); ++c) {
        PlayoutResult res =
            playout(g, make_profile(nf.row_strategies[r], nf.col_strategies[c]));
        REQUIRE(nf.payoffs[r][c] == std::array<double, 2>{res.payoffs[0], res.payoffs[1]});
      }
    }
  }
}

TEST_CASE("normal-form cells agree with the independent oracle replay") {
  GameTree g = baseline_game();
  NormalFormGame nf = induce_normal_form(g);
  auto rows = testsupport::all_assignments(g, 0);
  auto cols = testsupport::all_assignments(g, 1);
  REQUIRE(rows.size() == 4);
  REQUIRE(cols.size() == 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(rows[r].label == nf.row_strategies[r].label);
      CHECK(cols[c].label == nf.col_strategies[c].label);
      std::vector<double> payoffs = testsupport::replay(
          g, testsupport::merged(rows[r].assignment, cols[c].assignment));
      CHECK(nf.payoffs[r][c] == std::array<double, 2>{payoffs[0], payoffs[1]});
    }
  }
}

TEST_CASE("strategy_by_label finds strategies and rejects bad labels") {
  NormalFormGame nf = induce_normal_form(baseline_game());
  const PureStrategy& ed = strategy_by_label(nf, "ED");
  CHECK(ed.owner == 0);
  CHECK(ed.assignment ==
        std::map<InfosetId, std::string>{{"v.stage1", "E"}, {"v.stage3", "D"}});
  const PureStrategy& wd = strategy_by_label(nf, "Wd");
  CHECK(wd.owner == 1);
  CHECK(wd.assignment ==
        std::map<InfosetId, std::string>{{"b.stage2", "W"}, {"b.stage3", "d"}});
  CHECK_THROWS_WITH(strategy_by_label(nf, "XX"),
                    Catch::Matchers::ContainsSubstring("unknown strategy label"));
}

TEST_CASE("strategy_by_label rejects a label both players use") {
  GameTree g;
  g.players = {{0, "p0"}, {1, "p1"}};
  g.root = "n0";
  g.nodes.emplace("n0", Node::decision("n0", 0, {{"A", "m0"}, {"B", "t0"}}));
  g.nodes.emplace("m0", Node::decision("m0", 1, {{"A", "t1"}, {"B", "t2"}}));
  g.nodes.emplace("t0", Node::terminal("t0", {0.0, 0.0}));
  g.nodes.emplace("t1", Node::terminal("t1", {1.0, 1.0}));
  g.nodes.emplace("t2", Node::terminal("t2", {2.0, 2.0}));
  g.infosets = {{"i0", 0, {"n0"}}, {"i1", 1, {"m0"}}};
  NormalFormGame nf = induce_normal_form(g);
  CHECK_THROWS_WITH(strategy_by_label(nf, "A"),
                    Catch::Matchers::ContainsSubstring("ambiguous"));
}

TEST_CASE("profile-space guard rejects oversized games") {
  // A chain of 21 two-action decision nodes for player 0: 2^21 strategies.
  GameTree g;
  g.players = {{0, "p0"}, {1, "p1"}};
  g.root = "n0";
  const int kDepth = 21;
  for (int i = 0; i < kDepth; ++i) {
    std::string id = "n" + std::to_string(i);
    std::string next = i + 1 < kDepth ? "n" + std::to_string(i + 1)
                                      : "t" + std::to_string(i + 1);
    std::string stop = "s" + std::to_string(i);
    g.nodes.emplace(id, Node::decision(id, 0, {{"go", next}, {"stop", stop}}));
    g.nodes.emplace(stop, Node::terminal(stop, {0.0, 0.0}));
    g.infosets.push_back({"i" + std::to_string(i), 0, {id}});
  }
  g.nodes.emplace("t" + std::to_string(kDepth),
                  Node::terminal("t" + std::to_string(kDepth), {1.0, 1.0}));
  REQUIRE(validate(g).ok());
  CHECK_THROWS_WITH(induce_normal_form(g),
                    Catch::Matchers::ContainsSubstring("limit"));
}

}  // namespace
