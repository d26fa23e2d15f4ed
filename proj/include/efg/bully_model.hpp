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

#ifndef EFG_BULLY_MODEL_HPP_
#define EFG_BULLY_MODEL_HPP_

// Built-in game family: a three-stage workplace conflict between a victim
// (player 0) and a bully (player 1).
//
//   Stage I   victim Ignores the bullying or Escalates.
//   Stage II  bully Withdraws or Escalates to third-party arbitration.
//   Stage III war of attrition: victim (R/D) and bully (r/d) move
//             simultaneously; mutual retreat (R,r) is costly, every other
//             combination is mutual destruction.
//
// A control level a in [0, 10] models accountability pressure on the bully.
// It deforms two bully payoffs via the utility curves below: the stage-I
// success payoff z(a) and the stage-III retreat payoff y(a). Victim payoffs
// never change. Control below 0.4 has negligible effect and reproduces the
// baseline exactly.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "efg/game_tree.hpp"

namespace efg {

// Baseline payoffs.
inline constexpr double kVictimToleratePayoff = -10.0;    // stage I, victim ignores
inline constexpr double kBullySuccessPayoff = 10.0;       // stage I, bully unchecked
inline constexpr double kVictimWinPayoff = 30.0;          // stage II, bully withdraws
inline constexpr double kBullyWithdrawPayoff = -30.0;     // stage II, bully withdraws
inline constexpr double kMutualRetreatPayoff = -20.0;     // stage III (R,r), both
inline constexpr double kMutualDestructionPayoff = -100.0;  // stage III otherwise

// Control regimes.
inline constexpr double kNegligibleControlLimit = 0.4;  // below: baseline behavior
inline constexpr double kLowControlLimit = 0.9;
inline constexpr double kMaxControl = 10.0;

// Model constants. The defaults define the canonical family; they are
// parameters so the curves can be re-shaped without touching the solver.
struct ModelParams {
  double stage1_cubic = 2.25;  // coefficient of x^3 in the stage-I utility
  double stage3_scale = 5.8;   // scale of the stage-III square-root loss
  double stage3_rate = 30.0;   // rate inside the stage-III square root
};

enum class Regime { kNegligible, kLow, kHigh };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kNegligible: return "negligible";
    case Regime::kLow: return "low";
    case Regime::kHigh: return "high";
  }
  return "?";
}

struct ControlLevel {
  double a = 0.0;
  Regime regime = Regime::kNegligible;
};

inline ControlLevel classify_control(double a) {
  if (!(a >= 0.0)) throw Error("control level must be >= 0");
  if (a > kMaxControl) {
    throw Error("control level must be <= " + std::to_string(kMaxControl));
  }
  Regime r = a < kNegligibleControlLimit ? Regime::kNegligible
             : a <= kLowControlLimit     ? Regime::kLow
                                         : Regime::kHigh;
  return {a, r};
}

// Bully's utility of successful bullying intensity x in [0, 1] under control
// level a: stage1_cubic * x^3 - a * x.
inline double stage1_utility(double x, double a, const ModelParams& mp = {}) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error("stage-I intensity must lie in [0, 1]");
  if (!(a >= 0.0)) throw Error("control level must be >= 0");
  return mp.stage1_cubic * x * x * x - a * x;
}

// Interior minimum of the stage-I utility: root of its derivative
// 3 * stage1_cubic * x^2 - a. Exists inside (0, 1] only for 0 < a <= 3c.
struct CriticalPoint {
  double x = 0.0;
  double u = 0.0;
};

inline CriticalPoint stage1_critical_point(double a, const ModelParams& mp = {}) {
  const double limit = 3.0 * mp.stage1_cubic;  // 6.75 for the default cubic
  if (!(a > 0.0) || a > limit) {
    throw Error("critical point outside domain (need 0 < a <= " +
                std::to_string(limit) + ")");
  }
  double x = std::sqrt(a / limit);
  return {x, stage1_utility(x, a, mp)};
}

// Exact fraction, normalized (den > 0, gcd(num, den) = 1).
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d) {
    if (d == 0) throw Error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Radicand of the stage-I critical point, x*^2 = a / (3 * cubic), computed
// in exact rational arithmetic. For the default cubic 9/4 this is 4a/27.
inline Rational stage1_critical_radicand(const Rational& a,
                                         const Rational& cubic = Rational::of(9, 4)) {
  return Rational::of(a.num * cubic.den, a.den * 3 * cubic.num);
}

// Bully's utility of failed bullying intensity x in [-1, 0] under control
// level a: -stage3_scale * sqrt(stage3_rate * a * (-x)). Non-positive, zero
// at x = 0 or a = 0.
inline double stage3_utility(double x, double a, const ModelParams& mp = {}) {
  if (!(x >= -1.0 && x <= 0.0)) throw Error("stage-III intensity must lie in [-1, 0]");
  if (!(a >= 0.0)) throw Error("control level must be >= 0");
  double loss = mp.stage3_scale * std::sqrt(mp.stage3_rate * a * (-x));
  return loss == 0.0 ? 0.0 : -loss;
}

// Node and infoset ids of the baseline tree, shared by the solver output and
// the shipped game file.
namespace bully_ids {
inline constexpr const char* kStage1 = "v1";       // victim: I / E
inline constexpr const char* kStage2 = "b2";       // bully: W / E
inline constexpr const char* kStage3Victim = "v3";  // victim: R / D
inline constexpr const char* kStage3BullyR = "b3r";
inline constexpr const char* kStage3BullyD = "b3d";
inline constexpr const char* kLeafIgnore = "t_I";
inline constexpr const char* kLeafWithdraw = "t_W";
inline constexpr const char* kLeafRetreat = "t_rr";
inline constexpr const char* kLeafRd = "t_rd";
inline constexpr const char* kLeafDr = "t_dr";
inline constexpr const char* kLeafDd = "t_dd";
inline constexpr const char* kVictimStage1 = "v.stage1";
inline constexpr const char* kVictimStage3 = "v.stage3";
inline constexpr const char* kBullyStage2 = "b.stage2";
inline constexpr const char* kBullyStage3 = "b.stage3";
}  // namespace bully_ids

// The conflict tree without control. Action order fixes the strategy label
// order: victim IR, ID, ER, ED and bully Wr, Wd, Er, Ed. The two stage-III
// bully nodes share one information set (the simultaneity device).
inline GameTree baseline_game() {
  namespace id = bully_ids;
  GameTree g;
  g.players = {{0, "victim"}, {1, "bully"}};
  g.root = id::kStage1;

  auto put = [&g](Node n) { g.nodes.emplace(n.id, std::move(n)); };
  put(Node::decision(id::kStage1, 0, {{"I", id::kLeafIgnore}, {"E", id::kStage2}}));
  put(Node::decision(id::kStage2, 1, {{"W", id::kLeafWithdraw}, {"E", id::kStage3Victim}}));
  put(Node::decision(id::kStage3Victim, 0,
                     {{"R", id::kStage3BullyR}, {"D", id::kStage3BullyD}}));
  put(Node::decision(id::kStage3BullyR, 1, {{"r", id::kLeafRetreat}, {"d", id::kLeafRd}}));
  put(Node::decision(id::kStage3BullyD, 1, {{"r", id::kLeafDr}, {"d", id::kLeafDd}}));
  put(Node::terminal(id::kLeafIgnore, {kVictimToleratePayoff, kBullySuccessPayoff}));
  put(Node::terminal(id::kLeafWithdraw, {kVictimWinPayoff, kBullyWithdrawPayoff}));
  put(Node::terminal(id::kLeafRetreat, {kMutualRetreatPayoff, kMutualRetreatPayoff}));
  put(Node::terminal(id::kLeafRd, {kMutualDestructionPayoff, kMutualDestructionPayoff}));
  put(Node::terminal(id::kLeafDr, {kMutualDestructionPayoff, kMutualDestructionPayoff}));
  put(Node::terminal(id::kLeafDd, {kMutualDestructionPayoff, kMutualDestructionPayoff}));

  g.infosets = {
      {id::kVictimStage1, 0, {id::kStage1}},
      {id::kBullyStage2, 1, {id::kStage2}},
      {id::kVictimStage3, 0, {id::kStage3Victim}},
      {id::kBullyStage3, 1, {id::kStage3BullyR, id::kStage3BullyD}},
  };
  return g;
}

struct StagePayoffs {
  double z = kBullySuccessPayoff;    // bully's stage-I success payoff
  double y = kMutualRetreatPayoff;   // bully's stage-III retreat payoff
};

// z(a) and y(a). In the negligible regime both keep their baseline values.
// Otherwise z(a) = max(0, stage-I utility at full intensity) and y(a) is the
// stage-III utility at full intensity, kept between the mutual-destruction
// floor (-100) and the baseline retreat payoff (-20).
inline StagePayoffs derive_payoffs(double a, const ModelParams& mp = {}) {
  ControlLevel level = classify_control(a);
  if (level.regime == Regime::kNegligible) {
    return {kBullySuccessPayoff, kMutualRetreatPayoff};
  }
  double z = std::max(0.0, stage1_utility(1.0, a, mp));
  double y = std::clamp(stage3_utility(-1.0, a, mp), kMutualDestructionPayoff,
                        kMutualRetreatPayoff);
  return {z, y};
}

struct ControlledModel {
  ControlLevel level;
  double z = kBullySuccessPayoff;
  double y = kMutualRetreatPayoff;
  GameTree game;
};

// Baseline tree with the bully's stage-I leaf payoff replaced by z(a) and the
// (R,r) leaf bully payoff replaced by y(a). Victim payoffs and the
// mutual-destruction leaves are untouched.
inline ControlledModel build_game(double a, const ModelParams& mp = {}) {
  ControlledModel model;
  model.level = classify_control(a);
  StagePayoffs p = derive_payoffs(a, mp);
  model.z = p.z;
  model.y = p.y;
  model.game = baseline_game();
  model.game.nodes.at(bully_ids::kLeafIgnore).payoffs[1] = p.z;
  model.game.nodes.at(bully_ids::kLeafRetreat).payoffs[1] = p.y;
  return model;
}

// Control level at which the bully's retreat payoff y(a) crosses the
// stage-II withdraw payoff and the equilibrium structure flips:
// the root of stage3_scale * sqrt(stage3_rate * a) = 30.
inline double regime_boundary(const ModelParams& mp = {}) {
  double ratio = -kBullyWithdrawPayoff / mp.stage3_scale;
  return ratio * ratio / mp.stage3_rate;
}

enum class Stage { kStage1, kStage3 };

inline const char* stage_name(Stage s) {
  return s == Stage::kStage1 ? "I" : "III";
}

struct CurvePoint {
  double x = 0.0;
  double u = 0.0;
};

struct UtilityCurve {
  Stage stage = Stage::kStage1;
  double a = 0.0;
  std::vector<CurvePoint> samples;  // strictly increasing in x
};

// n equally spaced samples of each utility curve: stage I on [0, 1] and
// stage III on [-1, 0].
inline std::pair<UtilityCurve, UtilityCurve> sample_curves(double a, int n,
                                                           const ModelParams& mp = {}) {
  classify_control(a);  // range check
  if (n < 2) throw Error("need at least 2 samples per curve");
  UtilityCurve one{Stage::kStage1, a, {}};
  UtilityCurve three{Stage::kStage3, a, {}};
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(n - 1);
    one.samples.push_back({t, stage1_utility(t, a, mp)});
    three.samples.push_back({t - 1.0, stage3_utility(t - 1.0, a, mp)});
  }
  return {std::move(one), std::move(three)};
}

}  // namespace efg

#endif  // EFG_BULLY_MODEL_HPP_
