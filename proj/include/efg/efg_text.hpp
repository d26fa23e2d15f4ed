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

#ifndef EFG_EFG_TEXT_HPP_
#define EFG_EFG_TEXT_HPP_

// EFG-LITE: a line-oriented text format for two-player extensive-form games.
//
//   # comment (to end of line)
//   player <index> <name>                      exactly two: indices 0 and 1
//   node <id> decision <player> infoset <id>   every decision node names its
//                                              infoset; singletons are never
//                                              implicit
//   edge <parent> <label> <child>              file order of edge lines is
//                                              the action order
//   leaf <id> <payoff0> <payoff1>              one payoff per player index
//   root <id>
//
// Directives may appear in any order; references are resolved after the
// whole file is read. Indentation is ignored. Parse errors carry the line
// and column of the offending token.

#include <array>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "efg/game_tree.hpp"

namespace efg {

class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& message)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Shortest decimal string that parses back to exactly the same double.
inline std::string to_string_shortest(double v) {
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

// Fixed number of significant digits (for tables and machine reports).
inline std::string to_string_sig(double v, int digits) {
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                           std::chars_format::general, digits);
  return std::string(buf.data(), res.ptr);
}

inline double round_sig(double v, int digits) {
  std::string s = to_string_sig(v, digits);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

namespace detail {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

inline double parse_payoff(const Token& t, int line) {
  double v = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError(line, t.col, "invalid payoff value '" + t.text + "'");
  }
  return v;
}

inline int parse_player_index(const Token& t, int line) {
  if (t.text != "0" && t.text != "1") {
    throw ParseError(line, t.col, "player index must be 0 or 1, got '" + t.text + "'");
  }
  return t.text == "0" ? 0 : 1;
}

}  // namespace detail

inline GameTree parse_game_file(std::string_view text) {
  using detail::Token;

  struct PendingEdge {
    NodeId parent;
    std::string label;
    NodeId child;
    int line = 0;
    int parent_col = 0;
    int label_col = 0;
    int child_col = 0;
  };

  GameTree tree;
  std::vector<PendingEdge> edges;
  std::map<InfosetId, Infoset> infosets;
  std::vector<InfosetId> infoset_order;
  std::set<int> player_indices;
  bool have_root = false;
  NodeId root_ref;
  int root_line = 0;
  int root_col = 0;

  auto expect_tokens = [](const std::vector<Token>& tokens, std::size_t n, int line,
                          const char* shape) {
    if (tokens.size() == n) return;
    if (tokens.size() < n) {
      const Token& last = tokens.back();
      throw ParseError(line, last.col + static_cast<int>(last.text.size()),
                       std::string("expected ") + shape);
    }
    throw ParseError(line, tokens[n].col, std::string("expected ") + shape);
  };

  auto check_fresh_id = [&](const Token& t, int line) {
    if (tree.nodes.count(t.text) != 0) {
      throw ParseError(line, t.col, "duplicate id '" + t.text + "'");
    }
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::vector<Token> tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0].text;

    if (directive == "player") {
      expect_tokens(tokens, 3, line_no, "'player <index> <name>'");
      int index = detail::parse_player_index(tokens[1], line_no);
      if (!player_indices.insert(index).second) {
        throw ParseError(line_no, tokens[1].col,
                         "duplicate player index " + tokens[1].text);
      }
      tree.players.push_back({index, tokens[2].text});
    } else if (directive == "node") {
      expect_tokens(tokens, 6, line_no,
                    "'node <id> decision <player> infoset <infoset-id>'");
      if (tokens[2].text != "decision") {
        throw ParseError(line_no, tokens[2].col,
                         "expected keyword 'decision', got '" + tokens[2].text + "'");
      }
      if (tokens[4].text != "infoset") {
        throw ParseError(line_no, tokens[4].col,
                         "expected keyword 'infoset', got '" + tokens[4].text + "'");
      }
      check_fresh_id(tokens[1], line_no);
      int owner = detail::parse_player_index(tokens[3], line_no);
      tree.nodes.emplace(tokens[1].text, Node::decision(tokens[1].text, owner, {}));
      const InfosetId& isid = tokens[5].text;
      auto it = infosets.find(isid);
      if (it == infosets.end()) {
        infosets.emplace(isid, Infoset{isid, owner, {tokens[1].text}});
        infoset_order.push_back(isid);
      } else {
        it->second.members.push_back(tokens[1].text);
      }
    } else if (directive == "edge") {
      expect_tokens(tokens, 4, line_no, "'edge <parent> <label> <child>'");
      edges.push_back({tokens[1].text, tokens[2].text, tokens[3].text, line_no,
                       tokens[1].col, tokens[2].col, tokens[3].col});
    } else if (directive == "leaf") {
      if (tokens.size() != 4) {
        int col = tokens.size() > 4
                      ? tokens[4].col
                      : tokens.back().col + static_cast<int>(tokens.back().text.size());
        throw ParseError(line_no, col, "payoff arity mismatch (expected 2 payoffs)");
      }
      check_fresh_id(tokens[1], line_no);
      double p0 = detail::parse_payoff(tokens[2], line_no);
      double p1 = detail::parse_payoff(tokens[3], line_no);
      tree.nodes.emplace(tokens[1].text, Node::terminal(tokens[1].text, {p0, p1}));
    } else if (directive == "root") {
      expect_tokens(tokens, 2, line_no, "'root <id>'");
      if (have_root) {
        throw ParseError(line_no, tokens[0].col, "duplicate root directive");
      }
      have_root = true;
      root_ref = tokens[1].text;
      root_line = line_no;
      root_col = tokens[1].col;
    } else {
      throw ParseError(line_no, tokens[0].col,
                       "unknown directive '" + directive + "'");
    }
  }

  if (!have_root) throw ParseError(line_no, 1, "missing root directive");
  if (tree.nodes.count(root_ref) == 0) {
    throw ParseError(root_line, root_col, "unknown node reference '" + root_ref + "'");
  }
  tree.root = root_ref;

  for (const PendingEdge& e : edges) {
    auto parent = tree.nodes.find(e.parent);
    if (parent == tree.nodes.end()) {
      throw ParseError(e.line, e.parent_col, "unknown node reference '" + e.parent + "'");
    }
    if (!parent->second.is_decision()) {
      throw ParseError(e.line, e.parent_col, "edge from terminal node '" + e.parent + "'");
    }
    if (tree.nodes.count(e.child) == 0) {
      throw ParseError(e.line, e.child_col, "unknown node reference '" + e.child + "'");
    }
    for (const ActionEdge& a : parent->second.actions) {
      if (a.label == e.label) {
        throw ParseError(e.line, e.label_col, "duplicate action label '" + e.label +
                                                  "' at node '" + e.parent + "'");
      }
    }
    parent->second.actions.push_back({e.label, e.child});
  }

  for (const InfosetId& id : infoset_order) tree.infosets.push_back(infosets.at(id));
  std::sort(tree.players.begin(), tree.players.end(),
            [](const Player& a, const Player& b) { return a.index < b.index; });
  return tree;
}

// Serializes a validated tree in EFG-LITE. parse_game_file(format_game(t))
// reproduces a tree with identical playouts for every complete profile.
inline std::string format_game(const GameTree& tree) {
  const detail::TreeIndex ix = detail::index_tree(tree);
  std::ostringstream out;
  for (const Player& p : tree.players) {
    out << "player " << p.index << ' ' << p.name << '\n';
  }
  out << "root " << tree.root << '\n';
  for (const NodeId& id : ix.preorder) {
    const Node& n = tree.node(id);
    if (n.is_decision()) {
      const Infoset* is = tree.infoset_of(id);
      if (is == nullptr) {
        throw Error("cannot format: decision node '" + id +
                    "' belongs to no information set");
      }
      out << "node " << id << " decision " << n.owner << " infoset " << is->id << '\n';
    } else {
      out << "leaf " << id;
      for (double p : n.payoffs) out << ' ' << to_string_shortest(p);
      out << '\n';
    }
  }
  for (const NodeId& id : ix.preorder) {
    for (const ActionEdge& a : tree.node(id).actions) {
      out << "edge " << id << ' ' << a.label << ' ' << a.child << '\n';
    }
  }
  return out.str();
}

}  // namespace efg

#endif  // EFG_EFG_TEXT_HPP_
