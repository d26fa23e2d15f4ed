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

#ifndef EFG_STRATEGY_HPP_
#define EFG_STRATEGY_HPP_

// Pure-strategy enumeration and the normal form induced by playing out every
// strategy profile. Strategies differing only at unreachable information sets
// are kept distinct (no reduced-strategy elimination).

#include <array>
#include <climits>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "efg/game_tree.hpp"

namespace efg {

// Exhaustive enumeration stops making sense somewhere; reject games whose
// profile space exceeds this.
inline constexpr double kMaxProfiles = 1e6;

// One action per information set of the owner. The label concatenates the
// chosen action labels in the owner's infoset order (see ordered_infosets).
struct PureStrategy {
  int owner = -1;
  std::map<InfosetId, std::string> assignment;
  std::string label;
};

struct StrategyProfile {
  std::array<PureStrategy, 2> by_player;  // indexed by player index
};

inline StrategyProfile make_profile(const PureStrategy& a, const PureStrategy& b) {
  if (a.owner == b.owner || a.owner < 0 || a.owner > 1 || b.owner < 0 || b.owner > 1) {
    throw Error("profile needs one strategy per player");
  }
  StrategyProfile p;
  p.by_player[a.owner] = a;
  p.by_player[b.owner] = b;
  return p;
}

inline std::map<InfosetId, std::string> merge_assignments(const StrategyProfile& p) {
  std::map<InfosetId, std::string> merged = p.by_player[0].assignment;
  merged.insert(p.by_player[1].assignment.begin(), p.by_player[1].assignment.end());
  return merged;
}

inline PlayoutResult playout(const GameTree& tree, const StrategyProfile& p) {
  return playout(tree, merge_assignments(p));
}

// A player's information sets ordered by first pre-order visit of any member
// node. This is the canonical order for strategy labels.
inline std::vector<const Infoset*> ordered_infosets(const GameTree& tree, int player) {
  if (tree.find_player(player) == nullptr) {
    throw Error("player index " + std::to_string(player) + " is not in the game");
  }
  const detail::TreeIndex ix = detail::index_tree(tree);
  std::vector<std::pair<int, const Infoset*>> keyed;
  for (const Infoset& is : tree.infosets) {
    if (is.owner != player) continue;
    int first = INT_MAX;
    for (const NodeId& m : is.members) {
      auto it = ix.order.find(m);
      if (it != ix.order.end() && it->second < first) first = it->second;
    }
    keyed.emplace_back(first, &is);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<const Infoset*> out;
  out.reserve(keyed.size());
  for (const auto& [pos, is] : keyed) out.push_back(is);
  return out;
}

// Full cartesian product of action choices over the player's information
// sets, ordered lexicographically: the first infoset (in pre-order) varies
// slowest, within it actions in node order. A player with no information
// sets has exactly one (empty) strategy.
inline std::vector<PureStrategy> enumerate_strategies(const GameTree& tree, int player) {
  const std::vector<const Infoset*> sets = ordered_infosets(tree, player);

  std::vector<const std::vector<ActionEdge>*> actions;
  double count = 1;
  for (const Infoset* is : sets) {
    if (is->members.empty()) throw Error("information set '" + is->id + "' is empty");
    actions.push_back(&tree.node(is->members.front()).actions);
    count *= static_cast<double>(actions.back()->size());
    if (count > kMaxProfiles) {
      throw Error("strategy space of player " + std::to_string(player) +
                  " exceeds the enumeration limit");
    }
  }

  std::vector<PureStrategy> out;
  std::vector<std::size_t> pick(sets.size(), 0);
  for (;;) {
    PureStrategy s;
    s.owner = player;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::string& label = (*actions[i])[pick[i]].label;
      s.assignment[sets[i]->id] = label;
      s.label += label;
    }
    out.push_back(std::move(s));
    int i = static_cast<int>(sets.size()) - 1;
    while (i >= 0) {
      if (++pick[i] < actions[i]->size()) break;
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

// Payoff matrix over all profile playouts. Rows are player 0's strategies,
// columns player 1's; cell payoffs are indexed by player.
struct NormalFormGame {
  std::vector<PureStrategy> row_strategies;
  std::vector<PureStrategy> col_strategies;
  std::vector<std::vector<std::array<double, 2>>> payoffs;

  int rows() const { return static_cast<int>(row_strategies.size()); }
  int cols() const { return static_cast<int>(col_strategies.size()); }
};

inline NormalFormGame induce_normal_form(const GameTree& tree) {
  NormalFormGame nf;
  nf.row_strategies = enumerate_strategies(tree, 0);
  nf.col_strategies = enumerate_strategies(tree, 1);
  if (static_cast<double>(nf.rows()) * static_cast<double>(nf.cols()) > kMaxProfiles) {
    throw Error("profile space exceeds the enumeration limit");
  }
  nf.payoffs.assign(nf.rows(), std::vector<std::array<double, 2>>(nf.cols()));
  for (int r = 0; r < nf.rows(); ++r) {
    for (int c = 0; c < nf.cols(); ++c) {
      StrategyProfile p = make_profile(nf.row_strategies[r], nf.col_strategies[c]);
      PlayoutResult res = playout(tree, p);
      nf.payoffs[r][c] = {res.payoffs[0], res.payoffs[1]};
    }
  }
  return nf;
}

// Looks a strategy up by its label among rows and columns. The label must
// identify exactly one strategy across both players.
inline const PureStrategy& strategy_by_label(const NormalFormGame& nf,
                                             const std::string& label) {
  const PureStrategy* found = nullptr;
  for (const auto* list : {&nf.row_strategies, &nf.col_strategies}) {
    for (const PureStrategy& s : *list) {
      if (s.label != label) continue;
      if (found != nullptr) throw Error("ambiguous strategy label '" + label + "'");
      found = &s;
    }
  }
  if (found == nullptr) throw Error("unknown strategy label '" + label + "'");
  return *found;
}

}  // namespace efg

#endif  // EFG_STRATEGY_HPP_
