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

#ifndef EFG_GAME_TREE_HPP_
#define EFG_GAME_TREE_HPP_

// Data model for finite two-player extensive-form games with explicit
// information sets: validation, subgame detection, and deterministic playout.
//
// A GameTree is treated as immutable after construction. Every operation in
// this header is a pure function of its inputs, so validated trees can be
// shared freely across threads.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace efg {

// Payoff comparisons in equilibrium logic are tolerance-based; a deviation
// must improve a payoff by more than this to count as an improvement.
inline constexpr double kDefaultTolerance = 1e-9;

inline constexpr int kNumPlayers = 2;

// Input and domain errors (bad files, bad arguments, broken preconditions).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed result violated a structural guarantee of the solver itself.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using NodeId = std::string;
using InfosetId = std::string;

struct Player {
  int index = 0;  // 0 or 1
  std::string name;
};

struct ActionEdge {
  std::string label;
  NodeId child;
};

// Either a decision node (owner + ordered actions) or a terminal node
// (one payoff entry per player, indexed by player index).
struct Node {
  enum class Kind { kDecision, kTerminal };

  NodeId id;
  Kind kind = Kind::kTerminal;
  int owner = -1;                   // decision nodes only
  std::vector<ActionEdge> actions;  // decision nodes only; list order is action order
  std::vector<double> payoffs;      // terminal nodes only

  bool is_decision() const { return kind == Kind::kDecision; }
  bool is_terminal() const { return kind == Kind::kTerminal; }

  static Node decision(NodeId id, int owner, std::vector<ActionEdge> actions) {
    Node n;
    n.id = std::move(id);
    n.kind = Kind::kDecision;
    n.owner = owner;
    n.actions = std::move(actions);
    return n;
  }

  static Node terminal(NodeId id, std::vector<double> payoffs) {
    Node n;
    n.id = std::move(id);
    n.kind = Kind::kTerminal;
    n.payoffs = std::move(payoffs);
    return n;
  }
};

// Decision nodes a player cannot tell apart when moving. Simultaneous moves
// are modeled by putting the second mover's nodes into one information set.
// Membership is explicit and mandatory: a decision node outside every
// information set is a validation error, never an implicit singleton.
struct Infoset {
  InfosetId id;
  int owner = -1;
  std::vector<NodeId> members;
};

struct GameTree {
  std::vector<Player> players;  // exactly two, indices 0 and 1
  NodeId root;
  std::map<NodeId, Node> nodes;
  std::vector<Infoset> infosets;

  const Node* find_node(const NodeId& id) const {
    auto it = nodes.find(id);
    return it == nodes.end() ? nullptr : &it->second;
  }

  const Node& node(const NodeId& id) const {
    const Node* n = find_node(id);
    if (n == nullptr) throw Error("unknown node id '" + id + "'");
    return *n;
  }

  const Infoset* find_infoset(const InfosetId& id) const {
    for (const Infoset& is : infosets) {
      if (is.id == id) return &is;
    }
    return nullptr;
  }

  // Information set containing a decision node, or nullptr.
  const Infoset* infoset_of(const NodeId& node_id) const {
    for (const Infoset& is : infosets) {
      for (const NodeId& m : is.members) {
        if (m == node_id) return &is;
      }
    }
    return nullptr;
  }

  const Player* find_player(int index) const {
    for (const Player& p : players) {
      if (p.index == index) return &p;
    }
    return nullptr;
  }
};

struct Violation {
  std::string subject;  // offending node / infoset id
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }

  std::string summary() const {
    std::string s;
    for (const Violation& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.subject + ": " + v.rule;
      if (!v.detail.empty()) s += " (" + v.detail + ")";
    }
    return s;
  }
};

// Checks every structural invariant: two players, well-formed nodes, tree
// shape, reachability, and information-set consistency. Violations are data,
// not failures; callers decide what to do with a non-ok report.
// Perfect recall is NOT checked; trees without it are accepted as-is.
inline ValidationReport validate(const GameTree& tree) {
  ValidationReport report;
  auto add = [&](std::string subject, std::string rule, std::string detail = "") {
    report.violations.push_back(
        {std::move(subject), std::move(rule), std::move(detail)});
  };

  if (tree.players.size() != static_cast<std::size_t>(kNumPlayers)) {
    add("players", "player count",
        "expected exactly 2 players, found " + std::to_string(tree.players.size()));
  } else {
    std::set<int> seen;
    for (const Player& p : tree.players) {
      if (p.index != 0 && p.index != 1) {
        add("players", "invalid player index", std::to_string(p.index));
      } else if (!seen.insert(p.index).second) {
        add("players", "duplicate player index", std::to_string(p.index));
      }
    }
  }

  for (const auto& [id, n] : tree.nodes) {
    if (n.id != id) add(id, "node id mismatch", "stored id '" + n.id + "'");
    if (n.is_decision()) {
      if (tree.find_player(n.owner) == nullptr) {
        add(id, "invalid owner", "player index " + std::to_string(n.owner));
      }
      if (n.actions.empty()) add(id, "decision node without actions");
      std::set<std::string> labels;
      for (const ActionEdge& a : n.actions) {
        if (a.label.empty()) add(id, "empty action label");
        if (!labels.insert(a.label).second) {
          add(id, "duplicate action label", a.label);
        }
        if (tree.find_node(a.child) == nullptr) {
          add(id, "dangling child reference", a.child);
        }
      }
    } else {
      if (n.payoffs.size() != static_cast<std::size_t>(kNumPlayers)) {
        add(id, "payoff arity",
            "expected 2 payoffs, found " + std::to_string(n.payoffs.size()));
      }
      if (!n.actions.empty()) add(id, "terminal node with actions");
    }
  }

  const Node* root = tree.find_node(tree.root);
  if (root == nullptr) {
    add(tree.root.empty() ? "root" : tree.root, "missing root");
  }

  // Tree shape: every non-root node has exactly one parent, the root none.
  std::map<NodeId, int> indegree;
  for (const auto& [id, n] : tree.nodes) indegree[id] = 0;
  for (const auto& [id, n] : tree.nodes) {
    for (const ActionEdge& a : n.actions) {
      auto it = indegree.find(a.child);
      if (it != indegree.end()) ++it->second;
    }
  }
  std::set<NodeId> shape_flagged;
  for (const auto& [id, deg] : indegree) {
    if (id == tree.root) {
      if (deg > 0) {
        add(id, "root has a parent");
        shape_flagged.insert(id);
      }
    } else if (deg == 0) {
      add(id, "unreachable node", "no parent");
      shape_flagged.insert(id);
    } else if (deg > 1) {
      add(id, "multiple parents", std::to_string(deg) + " parents");
      shape_flagged.insert(id);
    }
  }

  if (root != nullptr) {
    std::set<NodeId> visited;
    std::vector<NodeId> stack{tree.root};
    while (!stack.empty()) {
      NodeId cur = stack.back();
      stack.pop_back();
      if (!visited.insert(cur).second) continue;  // revisits flagged above
      const Node* n = tree.find_node(cur);
      if (n == nullptr) continue;
      for (const ActionEdge& a : n->actions) stack.push_back(a.child);
    }
    for (const auto& [id, n] : tree.nodes) {
      if (visited.count(id) == 0 && shape_flagged.count(id) == 0) {
        add(id, "unreachable node", "not reachable from root");
      }
    }
  }

  // Information sets.
  std::map<NodeId, int> membership;
  std::set<InfosetId> infoset_ids;
  for (const Infoset& is : tree.infosets) {
    if (!infoset_ids.insert(is.id).second) add(is.id, "duplicate infoset id");
    if (is.members.empty()) add(is.id, "empty information set");
    if (tree.find_player(is.owner) == nullptr) {
      add(is.id, "invalid owner", "player index " + std::to_string(is.owner));
    }
    const std::vector<ActionEdge>* reference = nullptr;
    NodeId reference_node;
    for (const NodeId& m : is.members) {
      const Node* n = tree.find_node(m);
      if (n == nullptr) {
        add(is.id, "infoset member missing", m);
        continue;
      }
      if (!n->is_decision()) {
        add(is.id, "infoset member not a decision node", m);
        continue;
      }
      ++membership[m];
      if (n->owner != is.owner) add(is.id, "infoset owner mismatch", m);
      if (reference == nullptr) {
        reference = &n->actions;
        reference_node = m;
      } else {
        bool same = reference->size() == n->actions.size();
        for (std::size_t i = 0; same && i < reference->size(); ++i) {
          same = (*reference)[i].label == n->actions[i].label;
        }
        if (!same) {
          add(is.id, "infoset action mismatch", m + " vs " + reference_node);
        }
      }
    }
  }
  for (const auto& [id, n] : tree.nodes) {
    if (!n.is_decision()) continue;
    auto it = membership.find(id);
    int count = it == membership.end() ? 0 : it->second;
    if (count == 0) {
      add(id, "decision node without information set");
    } else if (count > 1) {
      add(id, "decision node in multiple information sets");
    }
  }

  return report;
}

namespace detail {

// Pre-order numbering of a validated tree. A node's descendants occupy the
// half-open interval [order[n], exit[n]) of pre-order positions.
struct TreeIndex {
  std::vector<NodeId> preorder;
  std::map<NodeId, int> order;
  std::map<NodeId, int> depth;
  std::map<NodeId, int> exit;

  bool contains(const NodeId& ancestor, const NodeId& n) const {
    int a = order.at(ancestor);
    int i = order.at(n);
    return i >= a && i < exit.at(ancestor);
  }
};

inline TreeIndex index_tree(const GameTree& tree) {
  TreeIndex ix;
  int counter = 0;
  std::function<void(const NodeId&, int)> visit = [&](const NodeId& id, int d) {
    if (ix.order.count(id) != 0) {
      throw InternalError("node '" + id + "' visited twice; tree is not validated");
    }
    ix.order[id] = counter++;
    ix.preorder.push_back(id);
    ix.depth[id] = d;
    for (const ActionEdge& a : tree.node(id).actions) visit(a.child, d + 1);
    ix.exit[id] = counter;
  };
  visit(tree.root, 0);
  return ix;
}

}  // namespace detail

// Decision nodes that root a proper subgame: the node's information set is
// the singleton {node}, and no information set straddles the boundary of its
// subtree. The whole-game root is always included (the game is trivially its
// own subgame). Terminal nodes never qualify. Ordered deepest first, ties by
// pre-order position. Requires validate(tree).ok().
inline std::vector<NodeId> subgame_roots(const GameTree& tree) {
  const detail::TreeIndex ix = detail::index_tree(tree);
  std::vector<NodeId> roots;
  for (const NodeId& id : ix.preorder) {
    const Node& n = tree.node(id);
    if (!n.is_decision()) continue;
    if (id != tree.root) {
      const Infoset* own = tree.infoset_of(id);
      if (own == nullptr || own->members.size() != 1) continue;
      bool closed = true;
      for (const Infoset& is : tree.infosets) {
        bool any_inside = false;
        bool all_inside = true;
        for (const NodeId& m : is.members) {
          if (ix.order.count(m) != 0 && ix.contains(id, m)) {
            any_inside = true;
          } else {
            all_inside = false;
          }
        }
        if (any_inside && !all_inside) {
          closed = false;
          break;
        }
      }
      if (!closed) continue;
    }
    roots.push_back(id);
  }
  std::stable_sort(roots.begin(), roots.end(), [&](const NodeId& a, const NodeId& b) {
    return ix.depth.at(a) > ix.depth.at(b);
  });
  return roots;
}

struct PlayoutResult {
  std::vector<double> payoffs;
  std::vector<NodeId> path;  // root..terminal inclusive
};

// Deterministic walk from the root: at each decision node, follow the action
// assigned to that node's information set. `choices` maps infoset id to
// action label (both players merged; their infoset ids are disjoint).
inline PlayoutResult playout(const GameTree& tree,
                             const std::map<InfosetId, std::string>& choices) {
  PlayoutResult result;
  NodeId cur = tree.root;
  std::size_t steps = 0;
  for (;;) {
    if (++steps > tree.nodes.size() + 1) {
      throw InternalError("playout exceeded node count; tree is not validated");
    }
    result.path.push_back(cur);
    const Node& n = tree.node(cur);
    if (n.is_terminal()) {
      result.payoffs = n.payoffs;
      return result;
    }
    const Infoset* is = tree.infoset_of(cur);
    if (is == nullptr) {
      throw Error("decision node '" + cur + "' belongs to no information set");
    }
    auto choice = choices.find(is->id);
    if (choice == choices.end()) {
      throw Error("incomplete strategy: no action assigned to information set '" +
                  is->id + "'");
    }
    const ActionEdge* next = nullptr;
    for (const ActionEdge& a : n.actions) {
      if (a.label == choice->second) {
        next = &a;
        break;
      }
    }
    if (next == nullptr) {
      throw Error("action '" + choice->second + "' is not available at node '" +
                  cur + "'");
    }
    cur = next->child;
  }
}

// Copies the subtree under `subgame_root` as a standalone game. Every
// information set touching the subtree must lie entirely inside it.
inline GameTree extract_subgame(const GameTree& tree, const NodeId& subgame_root) {
  const detail::TreeIndex ix = detail::index_tree(tree);
  if (ix.order.count(subgame_root) == 0) {
    throw Error("unknown node id '" + subgame_root + "'");
  }
  GameTree sub;
  sub.players = tree.players;
  sub.root = subgame_root;
  for (const NodeId& id : ix.preorder) {
    if (ix.contains(subgame_root, id)) sub.nodes.emplace(id, tree.node(id));
  }
  for (const Infoset& is : tree.infosets) {
    bool any_inside = false;
    bool all_inside = true;
    for (const NodeId& m : is.members) {
      if (ix.order.count(m) != 0 && ix.contains(subgame_root, m)) {
        any_inside = true;
      } else {
        all_inside = false;
      }
    }
    if (any_inside && !all_inside) {
      throw Error("information set '" + is.id + "' is split by the subtree at '" +
                  subgame_root + "'");
    }
    if (any_inside) sub.infosets.push_back(is);
  }
  return sub;
}

}  // namespace efg

#endif  // EFG_GAME_TREE_HPP_
