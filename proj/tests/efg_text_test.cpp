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

#include "efg/efg_text.hpp"

#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "efg/bully_model.hpp"
#include "efg/strategy.hpp"
#include "support/random_trees.hpp"

namespace {

using namespace efg;

std::string read_asset(const std::string& name) {
  std::ifstream f(std::string(EFG_ASSET_DIR) + "/" + name, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Same playout payoffs for every complete profile.
void check_playout_isomorphic(const GameTree& a, const GameTree& b) {
  std::vector<PureStrategy> rows_a = enumerate_strategies(a, 0);
  std::vector<PureStrategy> cols_a = enumerate_strategies(a, 1);
  std::vector<PureStrategy> rows_b = enumerate_strategies(b, 0);
  std::vector<PureStrategy> cols_b = enumerate_strategies(b, 1);
  REQUIRE(rows_a.size() == rows_b.size());
  REQUIRE(cols_a.size() == cols_b.size());
  for (std::size_t r = 0; r < rows_a.size(); ++r) {
    REQUIRE(rows_a[r].label == rows_b[r].label);
    for (std::size_t c = 0; c < cols_a.size(); ++c) {
      REQUIRE(cols_a[c].label == cols_b[c].label);
      PlayoutResult pa = playout(a, make_profile(rows_a[r], cols_a[c]));
      PlayoutResult pb = playout(b, make_profile(rows_b[r], cols_b[c]));
      REQUIRE(pa.payoffs == pb.payoffs);
    }
  }
}

TEST_CASE("shipped baseline game file parses and matches the built-in model") {
  GameTree parsed = parse_game_file(read_asset("baseline.efg"));
  REQUIRE(validate(parsed).ok());
  check_playout_isomorphic(parsed, baseline_game());
}

TEST_CASE("single-terminal game file") {
  GameTree g = parse_game_file("player 0 a\nplayer 1 b\nroot t0\nleaf t0 0 0\n");
  REQUIRE(validate(g).ok());
  CHECK(g.node("t0").payoffs == std::vector<double>{0.0, 0.0});
}

TEST_CASE("comments and indentation are ignored") {
  GameTree g = parse_game_file(
      "# header comment\n"
      "  player 0 a   # trailing comment\n"
      "\tplayer 1 b\n"
      "   root t0\n"
      "leaf t0 1.5 -2.5  # payoffs\n");
  CHECK(g.node("t0").payoffs == std::vector<double>{1.5, -2.5});
}

TEST_CASE("undeclared node reference is a positioned error") {
  const std::string text =
      "player 0 a\n"
      "player 1 b\n"
      "root n0\n"
      "node n0 decision 0 infoset i0\n"
      "leaf t0 1 2\n"
      "edge n0 L t0\n"
      "edge n0 R n9\n";
  try {
    parse_game_file(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.col() == 11);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("n9"));
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 7"));
  }
}

TEST_CASE("parse errors carry the offending position") {
  SECTION("duplicate id") {
    CHECK_THROWS_MATCHES(
        parse_game_file("root t0\nleaf t0 0 0\nleaf t0 1 1\n"), ParseError,
        Catch::Matchers::MessageMatches(
            Catch::Matchers::ContainsSubstring("duplicate id 't0'")));
  }
  SECTION("payoff arity: too few") {
    CHECK_THROWS_MATCHES(parse_game_file("root t0\nleaf t0 5\n"), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("payoff arity")));
  }
  SECTION("payoff arity: too many") {
    CHECK_THROWS_MATCHES(parse_game_file("root t0\nleaf t0 5 6 7\n"), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("payoff arity")));
  }
  SECTION("invalid payoff") {
    CHECK_THROWS_MATCHES(parse_game_file("root t0\nleaf t0 5 x\n"), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("invalid payoff")));
  }
  SECTION("missing root") {
    CHECK_THROWS_MATCHES(parse_game_file("player 0 a\nplayer 1 b\nleaf t0 0 0\n"),
                         ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("missing root")));
  }
  SECTION("duplicate root") {
    CHECK_THROWS_MATCHES(parse_game_file("root t0\nroot t0\nleaf t0 0 0\n"),
                         ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("duplicate root")));
  }
  SECTION("unknown directive") {
    CHECK_THROWS_MATCHES(parse_game_file("banana t0\n"), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("unknown directive")));
  }
  SECTION("bad player index") {
    CHECK_THROWS_MATCHES(parse_game_file("player 7 x\nroot t0\nleaf t0 0 0\n"),
                         ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("player index")));
  }
  SECTION("bad node keyword") {
    CHECK_THROWS_MATCHES(
        parse_game_file("node n0 choice 0 infoset i0\nroot n0\n"), ParseError,
        Catch::Matchers::MessageMatches(
            Catch::Matchers::ContainsSubstring("expected keyword 'decision'")));
  }
  SECTION("duplicate action label") {
    const std::string text =
        "player 0 a\nplayer 1 b\nroot n0\n"
        "node n0 decision 0 infoset i0\n"
        "leaf t0 0 0\nleaf t1 1 1\n"
        "edge n0 L t0\nedge n0 L t1\n";
    CHECK_THROWS_MATCHES(parse_game_file(text), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("duplicate action label")));
  }
  SECTION("edge from terminal") {
    const std::string text = "root t0\nleaf t0 0 0\nleaf t1 1 1\nedge t0 L t1\n";
    CHECK_THROWS_MATCHES(parse_game_file(text), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("terminal node")));
  }
}

TEST_CASE("multi-member information sets come through the format") {
  GameTree g = parse_game_file(read_asset("baseline.efg"));
  const Infoset* stage3 = g.find_infoset("b.stage3");
  REQUIRE(stage3 != nullptr);
  CHECK(stage3->owner == 1);
  CHECK(stage3->members == std::vector<NodeId>{"b3r", "b3d"});
}

TEST_CASE("format round-trips the baseline game") {
  GameTree g = baseline_game();
  GameTree reparsed = parse_game_file(format_game(g));
  REQUIRE(validate(reparsed).ok());
  check_playout_isomorphic(g, reparsed);
}

TEST_CASE("format round-trips random trees") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    GameTree g = testsupport::random_tree(rng);
    GameTree reparsed = parse_game_file(format_game(g));
    REQUIRE(validate(reparsed).ok());
    check_playout_isomorphic(g, reparsed);
  }
}

TEST_CASE("format round-trips non-integer payoffs exactly") {
  GameTree g = build_game(0.6).game;
  GameTree reparsed = parse_game_file(format_game(g));
  for (const auto& [id, node] : g.nodes) {
    if (node.is_terminal()) {
      CHECK(reparsed.node(id).payoffs == node.payoffs);
    }
  }
}

TEST_CASE("random garbage parses to an error, never a crash") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> len(0, 120);
  std::uniform_int_distribution<int> chr(0, 95);
  const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyz0123456789 \t#.-+eE\nplayer node edge leaf root";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 300; ++i) {
    std::string text;
    int n = len(rng);
    for (int k = 0; k < n; ++k) text += alphabet[pick(rng)];
    try {
      GameTree g = parse_game_file(text);
      validate(g);  // may or may not hold; must not crash
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.col() >= 1);
    }
  }
}

TEST_CASE("shortest double formatting round-trips") {
  for (double v : {-24.607315985291853, 0.1, -100.45894683899489, 1e-9, 0.0, -20.0}) {
    std::string s = to_string_shortest(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
}

}  // namespace
