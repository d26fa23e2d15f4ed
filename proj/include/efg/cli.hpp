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

#ifndef EFG_CLI_HPP_
#define EFG_CLI_HPP_

// Command-line front end. Exit codes: 0 success, 2 input/usage error,
// 3 internal invariant violation (including reproduce mismatches).
//
//   efgsolve solve     --file F | --model a=V  [--concept nash|spne|both]
//                      [--tol T] [--format table|csv|json]
//   efgsolve curves    --a V [--samples N] [--out PATH]
//   efgsolve reproduce [--case baseline|attrition|low|high|all] [--a V]
//   efgsolve export    --a V [--out PATH]
//
// SOLVER_TOL in the environment overrides the default tolerance; an explicit
// --tol overrides both. Files written via --out are written atomically
// (temp file + rename).

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "efg/bully_model.hpp"
#include "efg/efg_text.hpp"
#include "efg/equilibria.hpp"
#include "efg/game_tree.hpp"
#include "efg/reproduce.hpp"
#include "efg/strategy.hpp"

namespace efg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

inline constexpr int kTableDigits = 6;
inline constexpr int kFileDigits = 12;

namespace cli_detail {

inline double parse_double_or_throw(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw Error("invalid " + what + " '" + text + "'");
  }
  return v;
}

// Accepts "a=0.6" (documented form) or a bare number.
inline double parse_model_spec(const std::string& spec) {
  std::string value = spec;
  if (value.rfind("a=", 0) == 0) value = value.substr(2);
  return parse_double_or_throw(value, "model parameter (expected a=<value>)");
}

inline std::string read_file_or_throw(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

inline void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write '" + path + "'");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ignore;
      fs::remove(tmp, ignore);
      throw Error("cannot write '" + path + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw Error("cannot write '" + path + "': " + ec.message());
  }
}

inline std::string payoff_pair(const std::array<double, 2>& p, int digits) {
  return "(" + to_string_sig(p[0], digits) + ", " + to_string_sig(p[1], digits) + ")";
}

inline std::string join_path(const std::vector<NodeId>& path) {
  std::string out;
  for (const NodeId& id : path) {
    if (!out.empty()) out += " -> ";
    out += id;
  }
  return out;
}

// Renders one backward-induction branch step, e.g. "v3: (R,r) -> (-20, -20)".
// Action labels are ordered by the infoset pre-order of the original tree.
inline std::string render_branch(const GameTree& tree, const SubgameBranch& branch,
                                 int digits) {
  const detail::TreeIndex ix = detail::index_tree(tree);
  std::vector<std::pair<int, std::string>> keyed;
  for (const auto& [isid, label] : branch.actions) {
    const Infoset* is = tree.find_infoset(isid);
    int first = INT_MAX;
    if (is != nullptr) {
      for (const NodeId& m : is->members) {
        auto it = ix.order.find(m);
        if (it != ix.order.end() && it->second < first) first = it->second;
      }
    }
    keyed.emplace_back(first, label);
  }
  std::sort(keyed.begin(), keyed.end());
  std::string labels;
  for (const auto& [pos, label] : keyed) {
    if (!labels.empty()) labels += ",";
    labels += label;
  }
  return branch.subgame_root + ": (" + labels + ") -> " +
         payoff_pair(branch.value, digits);
}

struct BestResponseMarks {
  // marks[r][c][player]: the payoff is a best response against the opponent.
  std::vector<std::vector<std::array<bool, 2>>> marks;
};

inline BestResponseMarks compute_marks(const NormalFormGame& nf, double tol) {
  BestResponseMarks out;
  out.marks.assign(nf.rows(), std::vector<std::array<bool, 2>>(
                                  nf.cols(), {false, false}));
  for (int c = 0; c < nf.cols(); ++c) {
    for (int r : best_response_rows(nf, c, tol)) out.marks[r][c][0] = true;
  }
  for (int r = 0; r < nf.rows(); ++r) {
    for (int c : best_response_cols(nf, r, tol)) out.marks[r][c][1] = true;
  }
  return out;
}

inline const OutcomeEntry* find_outcome(const EquilibriumReport& report,
                                        const std::string& row_label,
                                        const std::string& col_label) {
  for (const OutcomeEntry& o : report.outcomes) {
    if (o.row_label == row_label && o.col_label == col_label) return &o;
  }
  return nullptr;
}

inline void emit_table(const GameTree& tree, const EquilibriumReport& report,
                       const std::string& concept_name, std::ostream& out) {
  const NormalFormGame& nf = report.normal_form;
  const BestResponseMarks marks = compute_marks(nf, report.tolerance);

  out << "players: ";
  for (std::size_t i = 0; i < tree.players.size(); ++i) {
    if (i > 0) out << ", ";
    out << tree.players[i].index << " " << tree.players[i].name
        << (tree.players[i].index == 0 ? " (rows)" : " (columns)");
  }
  out << "\n\n";

  // Cell text with '*' in front of each best-response payoff.
  std::vector<std::vector<std::string>> cells(nf.rows(),
                                              std::vector<std::string>(nf.cols()));
  for (int r = 0; r < nf.rows(); ++r) {
    for (int c = 0; c < nf.cols(); ++c) {
      const auto& p = nf.payoffs[r][c];
      cells[r][c] = std::string(marks.marks[r][c][0] ? "*" : "") +
                    to_string_sig(p[0], kTableDigits) + "," +
                    (marks.marks[r][c][1] ? "*" : "") +
                    to_string_sig(p[1], kTableDigits);
    }
  }
  std::vector<std::size_t> widths(nf.cols());
  for (int c = 0; c < nf.cols(); ++c) {
    widths[c] = nf.col_strategies[c].label.size();
    for (int r = 0; r < nf.rows(); ++r) widths[c] = std::max(widths[c], cells[r][c].size());
  }
  std::size_t row_width = 0;
  for (const PureStrategy& s : nf.row_strategies) {
    row_width = std::max(row_width, s.label.size());
  }

  out << "normal form (* marks a best-response payoff):\n";
  out << std::string(row_width + 2, ' ');
  for (int c = 0; c < nf.cols(); ++c) {
    out << "  " << nf.col_strategies[c].label
        << std::string(widths[c] - nf.col_strategies[c].label.size(), ' ');
  }
  out << "\n";
  for (int r = 0; r < nf.rows(); ++r) {
    out << "  " << nf.row_strategies[r].label
        << std::string(row_width - nf.row_strategies[r].label.size(), ' ');
    for (int c = 0; c < nf.cols(); ++c) {
      out << "  " << cells[r][c] << std::string(widths[c] - cells[r][c].size(), ' ');
    }
    out << "\n";
  }
  out << "\n";

  if (concept_name == "nash" || concept_name == "both") {
    out << "pure Nash equilibria (" << report.nash.size() << ", tolerance "
        << to_string_shortest(report.tolerance) << "):\n";
    for (const ProfileRef& p : report.nash) {
      auto [rl, cl] = profile_labels(nf, p);
      const OutcomeEntry* o = find_outcome(report, rl, cl);
      out << "  (" << rl << "," << cl << ")";
      if (o != nullptr) {
        out << "  outcome (" << to_string_sig(o->payoffs[0], kTableDigits) << ", "
            << to_string_sig(o->payoffs[1], kTableDigits) << ")  path: "
            << join_path(o->path);
      }
      out << "\n";
    }
    out << "\n";
  }
  if (concept_name == "spne" || concept_name == "both") {
    out << "subgame-perfect equilibria (" << report.spne.size() << ", tolerance "
        << to_string_shortest(report.tolerance) << "):\n";
    for (const SpneSolution& s : report.spne) {
      const std::string& rl = s.profile.by_player[0].label;
      const std::string& cl = s.profile.by_player[1].label;
      const OutcomeEntry* o = find_outcome(report, rl, cl);
      out << "  (" << rl << "," << cl << ")";
      if (o != nullptr) {
        out << "  outcome (" << to_string_sig(o->payoffs[0], kTableDigits) << ", "
            << to_string_sig(o->payoffs[1], kTableDigits) << ")  path: "
            << join_path(o->path);
      }
      out << "\n";
      for (const SubgameBranch& b : s.trace) {
        out << "    at " << render_branch(tree, b, kTableDigits) << "\n";
      }
    }
    if (report.empty_continuations > 0) {
      out << "  (" << report.empty_continuations
          << " branch(es) ended as empty continuations: subgame without a pure "
             "equilibrium)\n";
    }
    out << "\n";
  }
}

inline void emit_csv(const EquilibriumReport& report, const std::string& concept_name,
                     std::ostream& out) {
  const NormalFormGame& nf = report.normal_form;
  const BestResponseMarks marks = compute_marks(nf, report.tolerance);
  std::set<std::pair<std::string, std::string>> nash_set;
  for (const ProfileRef& p : report.nash) nash_set.insert(profile_labels(nf, p));
  std::set<std::pair<std::string, std::string>> spne_set;
  for (const SpneSolution& s : report.spne) {
    spne_set.insert({s.profile.by_player[0].label, s.profile.by_player[1].label});
  }
  const bool want_nash = concept_name == "nash" || concept_name == "both";
  const bool want_spne = concept_name == "spne" || concept_name == "both";

  out << "row,col,u0,u1,row_best_response,col_best_response,nash,spne\n";
  for (int r = 0; r < nf.rows(); ++r) {
    for (int c = 0; c < nf.cols(); ++c) {
      std::pair<std::string, std::string> key = {nf.row_strategies[r].label,
                                                 nf.col_strategies[c].label};
      out << key.first << ',' << key.second << ','
          << to_string_sig(nf.payoffs[r][c][0], kFileDigits) << ','
          << to_string_sig(nf.payoffs[r][c][1], kFileDigits) << ','
          << (marks.marks[r][c][0] ? 1 : 0) << ',' << (marks.marks[r][c][1] ? 1 : 0)
          << ',' << (want_nash && nash_set.count(key) != 0 ? 1 : 0) << ','
          << (want_spne && spne_set.count(key) != 0 ? 1 : 0) << '\n';
    }
  }
}

inline void emit_json(const GameTree& tree, const EquilibriumReport& report,
                      const std::string& concept_name, std::ostream& out) {
  using nlohmann::json;
  const NormalFormGame& nf = report.normal_form;

  json doc;
  doc["players"] = json::array();
  for (const Player& p : tree.players) {
    doc["players"].push_back({{"index", p.index}, {"name", p.name}});
  }
  json rows = json::array();
  for (const PureStrategy& s : nf.row_strategies) rows.push_back(s.label);
  json cols = json::array();
  for (const PureStrategy& s : nf.col_strategies) cols.push_back(s.label);
  doc["strategies"] = {{"rows", rows}, {"cols", cols}};

  json matrix = json::array();
  for (int r = 0; r < nf.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < nf.cols(); ++c) {
      row.push_back({round_sig(nf.payoffs[r][c][0], kFileDigits),
                     round_sig(nf.payoffs[r][c][1], kFileDigits)});
    }
    matrix.push_back(row);
  }
  doc["matrix"] = matrix;

  json nash = json::array();
  if (concept_name == "nash" || concept_name == "both") {
    for (const ProfileRef& p : report.nash) {
      auto [rl, cl] = profile_labels(nf, p);
      nash.push_back({{"row", rl}, {"col", cl}});
    }
  }
  doc["nash"] = nash;

  json spne = json::array();
  if (concept_name == "spne" || concept_name == "both") {
    for (const SpneSolution& s : report.spne) {
      json trace = json::array();
      for (const SubgameBranch& b : s.trace) {
        json actions;
        for (const auto& [isid, label] : b.actions) actions[isid] = label;
        trace.push_back({{"root", b.subgame_root},
                         {"actions", actions},
                         {"value", {round_sig(b.value[0], kFileDigits),
                                    round_sig(b.value[1], kFileDigits)}}});
      }
      spne.push_back({{"row", s.profile.by_player[0].label},
                      {"col", s.profile.by_player[1].label},
                      {"trace", trace}});
    }
  }
  doc["spne"] = spne;

  json outcomes = json::array();
  for (const OutcomeEntry& o : report.outcomes) {
    json payoffs = json::array();
    for (double v : o.payoffs) payoffs.push_back(round_sig(v, kFileDigits));
    outcomes.push_back({{"row", o.row_label},
                        {"col", o.col_label},
                        {"payoffs", payoffs},
                        {"path", o.path}});
  }
  doc["outcomes"] = outcomes;
  doc["tolerance"] = report.tolerance;

  out << doc.dump(2) << "\n";
}

inline std::string curves_csv(const UtilityCurve& one, const UtilityCurve& three) {
  std::ostringstream out;
  out << "stage,a,x,u\n";
  for (const UtilityCurve* curve : {&one, &three}) {
    for (const CurvePoint& p : curve->samples) {
      out << stage_name(curve->stage) << ',' << to_string_sig(curve->a, kFileDigits)
          << ',' << to_string_sig(p.x, kFileDigits) << ','
          << to_string_sig(p.u, kFileDigits) << '\n';
    }
  }
  return out.str();
}

inline void emit_reproduce(const ReproduceReport& report, std::ostream& out) {
  std::string current_case;
  for (const AuditItem& item : report.items) {
    if (item.case_id != current_case) {
      if (!current_case.empty()) out << "\n";
      current_case = item.case_id;
      out << "case " << current_case << "\n";
    }
    out << "  [" << audit_status_name(item.status) << "] " << item.item << " ["
        << item.source << "]\n";
    out << "      published: " << item.expected << "\n";
    out << "      computed:  " << item.computed << "\n";
    if (!item.note.empty()) out << "      note: " << item.note << "\n";
  }
  out << "\nsummary: " << report.count(AuditStatus::kMatch) << " MATCH, "
      << report.count(AuditStatus::kMismatch) << " MISMATCH, "
      << report.count(AuditStatus::kPaperDiscrepancy) << " PAPER-DISCREPANCY\n";
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"solver for two-player extensive-form games with information sets"};
  app.name("efgsolve");
  app.require_subcommand(1);

  double default_tol = kDefaultTolerance;
  if (const char* env = std::getenv("SOLVER_TOL")) {
    try {
      default_tol = cli_detail::parse_double_or_throw(env, "SOLVER_TOL value");
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve a game for its equilibria");
  std::string file_path;
  std::string model_spec;
  std::string concept_name = "both";
  std::string format = "table";
  double tol = default_tol;
  solve_cmd->add_option("--file", file_path, "game file (EFG-LITE)");
  solve_cmd->add_option("--model", model_spec,
                        "built-in conflict model at control level a=<value>");
  solve_cmd->add_option("--concept", concept_name, "nash, spne, or both")
      ->check(CLI::IsMember({"nash", "spne", "both"}));
  solve_cmd->add_option("--tol", tol, "payoff comparison tolerance");
  solve_cmd->add_option("--format", format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // curves
  auto* curves_cmd =
      app.add_subcommand("curves", "sample the bully utility curves as CSV");
  double curves_a = 0.0;
  int curves_samples = 101;
  std::string curves_out;
  curves_cmd->add_option("--a", curves_a, "control level in [0, 10]")->required();
  curves_cmd->add_option("--samples", curves_samples, "samples per stage (>= 2)");
  curves_cmd->add_option("--out", curves_out, "output path (default: stdout)");

  // reproduce
  auto* repro_cmd = app.add_subcommand(
      "reproduce", "audit the published analysis of the built-in model");
  std::string repro_case = "all";
  double repro_a = 0.0;
  repro_cmd->add_option("--case", repro_case, "baseline, attrition, low, high, or all")
      ->check(CLI::IsMember({"baseline", "attrition", "low", "high", "all"}));
  repro_cmd->add_option("--a", repro_a, "control-level override for low/high");

  // export
  auto* export_cmd =
      app.add_subcommand("export", "write the built-in model as an EFG-LITE file");
  double export_a = 0.0;
  std::string export_out;
  export_cmd->add_option("--a", export_a, "control level in [0, 10]")->required();
  export_cmd->add_option("--out", export_out,
                         "output path (default: <regime>_a<value>.efg)");

  args.insert(args.begin(), "efgsolve");
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) {
      const bool have_file = !file_path.empty();
      const bool have_model = solve_cmd->count("--model") > 0;
      if (have_file == have_model) {
        throw Error("exactly one of --file and --model is required");
      }
      if (tol < 0.0) throw Error("tolerance must be >= 0");
      GameTree tree;
      if (have_file) {
        tree = parse_game_file(cli_detail::read_file_or_throw(file_path));
      } else {
        tree = build_game(cli_detail::parse_model_spec(model_spec)).game;
      }
      EquilibriumReport report = solve(tree, tol);
      if (format == "table") {
        cli_detail::emit_table(tree, report, concept_name, out);
      } else if (format == "csv") {
        cli_detail::emit_csv(report, concept_name, out);
      } else {
        cli_detail::emit_json(tree, report, concept_name, out);
      }
      return kExitOk;
    }

    if (curves_cmd->parsed()) {
      auto [one, three] = sample_curves(curves_a, curves_samples);
      std::string csv = cli_detail::curves_csv(one, three);
      if (curves_out.empty()) {
        out << csv;
      } else {
        cli_detail::write_file_atomic(curves_out, csv);
        out << "wrote " << curves_out << "\n";
      }
      return kExitOk;
    }

    if (repro_cmd->parsed()) {
      std::optional<double> a_override;
      if (repro_cmd->count("--a") > 0) a_override = repro_a;
      ReproduceReport report = run_reproduce(repro_case, a_override, default_tol);
      cli_detail::emit_reproduce(report, out);
      return report.has_mismatch() ? kExitInternal : kExitOk;
    }

    if (export_cmd->parsed()) {
      ControlledModel model = build_game(export_a);
      std::string path = export_out;
      if (path.empty()) {
        std::string regime = model.level.regime == Regime::kNegligible ? "baseline"
                             : model.level.regime == Regime::kLow      ? "low"
                                                                       : "high";
        path = regime + "_a" + to_string_shortest(export_a) + ".efg";
      }
      cli_detail::write_file_atomic(path, format_game(model.game));
      out << "wrote " << path << "\n";
      return kExitOk;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace efg

#endif  // EFG_CLI_HPP_
