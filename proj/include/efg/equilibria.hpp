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

#ifndef EFG_EQUILIBRIA_HPP_
#define EFG_EQUILIBRIA_HPP_

// Pure-strategy Nash equilibria over the induced normal form, and
// subgame-perfect equilibria by two independent routes:
//
//   spne_backward - generalized backward induction over subgame roots,
//     deepest first. Each subgame is solved for its pure equilibria; the
//     search BRANCHES once per subgame equilibrium (ties are explored, never
//     silently broken) and the subgame is replaced by a terminal node
//     carrying that equilibrium's payoffs. Every emitted profile records the
//     branch trace that produced it.
//
//   spne_filter - the definition, verbatim: enumerate all complete profiles
//     and keep those whose restriction to every subgame is a pure Nash
//     equilibrium of that subgame.
//
// The two routes must agree; solve() checks this and the SPNE-subset-of-NE
// inclusion on every run.
//
// The Nash condition is weak with tolerance: a unilateral deviation must
// improve a payoff by MORE than the tolerance to invalidate a profile.

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "efg/game_tree.hpp"
#include "efg/strategy.hpp"

namespace efg {

struct ProfileRef {
  int row = 0;
  int col = 0;
  friend bool operator==(const ProfileRef&, const ProfileRef&) = default;
  friend bool operator<(const ProfileRef& a, const ProfileRef& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

inline std::pair<std::string, std::string> profile_labels(const NormalFormGame& nf,
                                                          const ProfileRef& p) {
  return {nf.row_strategies[p.row].label, nf.col_strategies[p.col].label};
}

// Row indices maximizing player 0's payoff against the given column.
inline std::vector<int> best_response_rows(const NormalFormGame& nf, int col,
                                           double tol = kDefaultTolerance) {
  double best = nf.payoffs[0][col][0];
  for (int r = 1; r < nf.rows(); ++r) best = std::max(best, nf.payoffs[r][col][0]);
  std::vector<int> out;
  for (int r = 0; r < nf.rows(); ++r) {
    if (nf.payoffs[r][col][0] >= best - tol) out.push_back(r);
  }
  return out;
}

inline std::vector<int> best_response_cols(const NormalFormGame& nf, int row,
                                           double tol = kDefaultTolerance) {
  double best = nf.payoffs[row][0][1];
  for (int c = 1; c < nf.cols(); ++c) best = std::max(best, nf.payoffs[row][c][1]);
  std::vector<int> out;
  for (int c = 0; c < nf.cols(); ++c) {
    if (nf.payoffs[row][c][1] >= best - tol) out.push_back(c);
  }
  return out;
}

// All strategies of `player` whose payoff against `opponent` is within the
// tolerance of the best achievable payoff.
inline std::vector<PureStrategy> best_responses(const NormalFormGame& nf, int player,
                                                const PureStrategy& opponent,
                                                double tol = kDefaultTolerance) {
  if (player != 0 && player != 1) {
    throw Error("player index " + std::to_string(player) + " is not in the game");
  }
  const auto& opponents = player == 0 ? nf.col_strategies : nf.row_strategies;
  int oi = -1;
  for (int i = 0; i < static_cast<int>(opponents.size()); ++i) {
    if (opponents[i].label == opponent.label &&
        opponents[i].assignment == opponent.assignment) {
      oi = i;
      break;
    }
  }
  if (oi < 0) throw Error("opponent strategy is not part of this normal form");

  std::vector<int> indices =
      player == 0 ? best_response_rows(nf, oi, tol) : best_response_cols(nf, oi, tol);
  const auto& own = player == 0 ? nf.row_strategies : nf.col_strategies;
  std::vector<PureStrategy> out;
  for (int i : indices) out.push_back(own[i]);
  return out;
}

// All profiles where both strategies are mutual best responses, in row-major
// order. Equivalently: no unilateral deviation improves a player's payoff by
// more than the tolerance.
inline std::vector<ProfileRef> pure_nash(const NormalFormGame& nf,
                                         double tol = kDefaultTolerance) {
  std::vector<double> row_best(nf.cols());
  std::vector<double> col_best(nf.rows());
  for (int c = 0; c < nf.cols(); ++c) {
    row_best[c] = nf.payoffs[0][c][0];
    for (int r = 1; r < nf.rows(); ++r) {
      row_best[c] = std::max(row_best[c], nf.payoffs[r][c][0]);
    }
  }
  for (int r = 0; r < nf.rows(); ++r) {
    col_best[r] = nf.payoffs[r][0][1];
    for (int c = 1; c < nf.cols(); ++c) {
      col_best[r] = std::max(col_best[r], nf.payoffs[r][c][1]);
    }
  }
  std::vector<ProfileRef> out;
  for (int r = 0; r < nf.rows(); ++r) {
    for (int c = 0; c < nf.cols(); ++c) {
      if (nf.payoffs[r][c][0] >= row_best[c] - tol &&
          nf.payoffs[r][c][1] >= col_best[r] - tol) {
        out.push_back({r, c});
      }
    }
  }
  return out;
}

// One step of a backward-induction branch: at `subgame_root`, the chosen
// subgame equilibrium (as infoset assignments) and the payoffs the subgame
// was replaced with.
struct SubgameBranch {
  NodeId subgame_root;
  std::map<InfosetId, std::string> actions;
  std::array<double, 2> value = {0.0, 0.0};
};

struct SpneSolution {
  StrategyProfile profile;
  std::vector<SubgameBranch> trace;  // deepest subgame first
};

namespace detail {

// Replaces the subtree under `subgame_root` with a terminal node (same id)
// carrying `value`. Information sets inside the subtree are dropped.
inline void replace_with_terminal(GameTree& tree, const NodeId& subgame_root,
                                  const std::vector<double>& value) {
  std::set<NodeId> region;  // subgame_root and all descendants
  std::vector<NodeId> stack{subgame_root};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    if (!region.insert(cur).second) continue;
    for (const ActionEdge& a : tree.node(cur).actions) stack.push_back(a.child);
  }

  std::vector<Infoset> kept;
  for (const Infoset& is : tree.infosets) {
    bool any_inside = false;
    bool all_inside = true;
    for (const NodeId& m : is.members) {
      if (region.count(m) != 0) {
        any_inside = true;
      } else {
        all_inside = false;
      }
    }
    if (any_inside && !all_inside) {
      throw InternalError("information set '" + is.id +
                          "' split during subgame replacement");
    }
    if (!any_inside) kept.push_back(is);
  }
  tree.infosets = std::move(kept);

  for (const NodeId& id : region) {
    if (id != subgame_root) tree.nodes.erase(id);
  }
  Node& n = tree.nodes.at(subgame_root);
  n.kind = Node::Kind::kTerminal;
  n.owner = -1;
  n.actions.clear();
  n.payoffs = value;
}

inline StrategyProfile profile_from_assignment(
    const GameTree& tree, const std::map<InfosetId, std::string>& merged) {
  StrategyProfile p;
  for (int player = 0; player < kNumPlayers; ++player) {
    PureStrategy s;
    s.owner = player;
    for (const Infoset* is : ordered_infosets(tree, player)) {
      auto it = merged.find(is->id);
      if (it == merged.end()) {
        throw InternalError("backward induction left information set '" + is->id +
                            "' unassigned");
      }
      s.assignment[is->id] = it->second;
      s.label += it->second;
    }
    p.by_player[player] = std::move(s);
  }
  return p;
}

}  // namespace detail

// Generalized backward induction. Processes subgame roots deepest first; for
// each, computes the pure equilibria of the (already reduced) subgame and
// branches once per equilibrium. A subgame with no pure equilibrium ends its
// branch ("empty continuation"); the count of such dead ends is reported
// through `empty_continuations` when non-null. Requires validate(tree).ok().
inline std::vector<SpneSolution> spne_backward(const GameTree& tree,
                                               double tol = kDefaultTolerance,
                                               int* empty_continuations = nullptr) {
  struct State {
    GameTree reduced;
    std::map<InfosetId, std::string> actions;
    std::vector<SubgameBranch> trace;
  };

  std::vector<State> states;
  states.push_back({tree, {}, {}});
  int dead_branches = 0;

  for (const NodeId& g : subgame_roots(tree)) {
    std::vector<State> next;
    for (const State& st : states) {
      GameTree sub = extract_subgame(st.reduced, g);
      NormalFormGame nf = induce_normal_form(sub);
      std::vector<ProfileRef> eqs = pure_nash(nf, tol);
      if (eqs.empty()) {
        ++dead_branches;
        continue;
      }
      for (const ProfileRef& eq : eqs) {
        State s2 = st;
        SubgameBranch branch;
        branch.subgame_root = g;
        for (const PureStrategy* s :
             {&nf.row_strategies[eq.row], &nf.col_strategies[eq.col]}) {
          for (const auto& [isid, label] : s->assignment) {
            s2.actions[isid] = label;
            branch.actions[isid] = label;
          }
        }
        branch.value = nf.payoffs[eq.row][eq.col];
        detail::replace_with_terminal(s2.reduced, g,
                                      {branch.value[0], branch.value[1]});
        s2.trace.push_back(std::move(branch));
        next.push_back(std::move(s2));
      }
    }
    states = std::move(next);
    if (states.empty()) break;
  }

  if (empty_continuations != nullptr) *empty_continuations = dead_branches;

  std::vector<SpneSolution> out;
  out.reserve(states.size());
  for (const State& st : states) {
    SpneSolution sol;
    sol.profile = detail::profile_from_assignment(tree, st.actions);
    sol.trace = st.trace;
    out.push_back(std::move(sol));
  }
  return out;
}

// The subgame-perfection definition as an independent route: a complete
// profile survives iff its restriction to every subgame is a pure Nash
// equilibrium of that subgame's induced normal form.
inline std::vector<StrategyProfile> spne_filter(const GameTree& tree,
                                                double tol = kDefaultTolerance) {
  struct SubgameCheck {
    std::set<InfosetId> infoset_ids;
    std::set<std::map<InfosetId, std::string>> equilibria;
  };
  std::vector<SubgameCheck> checks;
  for (const NodeId& g : subgame_roots(tree)) {
    GameTree sub = extract_subgame(tree, g);
    NormalFormGame nf = induce_normal_form(sub);
    SubgameCheck check;
    for (const Infoset& is : sub.infosets) check.infoset_ids.insert(is.id);
    for (const ProfileRef& eq : pure_nash(nf, tol)) {
      StrategyProfile p =
          make_profile(nf.row_strategies[eq.row], nf.col_strategies[eq.col]);
      check.equilibria.insert(merge_assignments(p));
    }
    checks.push_back(std::move(check));
  }

  std::vector<PureStrategy> rows = enumerate_strategies(tree, 0);
  std::vector<PureStrategy> cols = enumerate_strategies(tree, 1);
  if (static_cast<double>(rows.size()) * static_cast<double>(cols.size()) >
      kMaxProfiles) {
    throw Error("profile space exceeds the enumeration limit");
  }

  std::vector<StrategyProfile> out;
  for (const PureStrategy& r : rows) {
    for (const PureStrategy& c : cols) {
      StrategyProfile p = make_profile(r, c);
      std::map<InfosetId, std::string> merged = merge_assignments(p);
      bool keep = true;
      for (const SubgameCheck& check : checks) {
        std::map<InfosetId, std::string> restriction;
        for (const auto& [isid, label] : merged) {
          if (check.infoset_ids.count(isid) != 0) restriction[isid] = label;
        }
        if (check.equilibria.count(restriction) == 0) {
          keep = false;
          break;
        }
      }
      if (keep) out.push_back(std::move(p));
    }
  }
  return out;
}

struct OutcomeEntry {
  std::string row_label;
  std::string col_label;
  std::vector<double> payoffs;
  std::vector<NodeId> path;
};

struct EquilibriumReport {
  NormalFormGame normal_form;
  std::vector<ProfileRef> nash;
  std::vector<SpneSolution> spne;
  std::vector<OutcomeEntry> outcomes;  // one per Nash profile, same order
  double tolerance = kDefaultTolerance;
  int empty_continuations = 0;
};

// Full solve: validates, induces the normal form, enumerates Nash profiles,
// runs both SPNE routes, and cross-checks them (route agreement and
// SPNE-subset-of-NE). Route disagreement raises InternalError.
inline EquilibriumReport solve(const GameTree& tree, double tol = kDefaultTolerance) {
  ValidationReport v = validate(tree);
  if (!v.ok()) throw Error("invalid game: " + v.summary());

  EquilibriumReport report;
  report.tolerance = tol;
  report.normal_form = induce_normal_form(tree);
  report.nash = pure_nash(report.normal_form, tol);
  report.spne = spne_backward(tree, tol, &report.empty_continuations);

  std::set<std::pair<std::string, std::string>> backward_set;
  for (const SpneSolution& s : report.spne) {
    backward_set.insert({s.profile.by_player[0].label, s.profile.by_player[1].label});
  }
  std::set<std::pair<std::string, std::string>> filter_set;
  for (const StrategyProfile& p : spne_filter(tree, tol)) {
    filter_set.insert({p.by_player[0].label, p.by_player[1].label});
  }
  if (backward_set != filter_set) {
    throw InternalError("subgame-perfect equilibrium routes disagree");
  }
  std::set<std::pair<std::string, std::string>> nash_set;
  for (const ProfileRef& p : report.nash) nash_set.insert(profile_labels(report.normal_form, p));
  for (const auto& labels : backward_set) {
    if (nash_set.count(labels) == 0) {
      throw InternalError("subgame-perfect profile (" + labels.first + "," +
                          labels.second + ") is not a Nash equilibrium");
    }
  }

  for (const ProfileRef& p : report.nash) {
    StrategyProfile profile = make_profile(report.normal_form.row_strategies[p.row],
                                           report.normal_form.col_strategies[p.col]);
    PlayoutResult res = playout(tree, profile);
    OutcomeEntry entry;
    entry.row_label = profile.by_player[0].label;
    entry.col_label = profile.by_player[1].label;
    entry.payoffs = res.payoffs;
    entry.path = res.path;
    report.outcomes.push_back(std::move(entry));
  }
  return report;
}

}  // namespace efg

#endif  // EFG_EQUILIBRIA_HPP_
