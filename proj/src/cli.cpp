#include "egg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "egg/endogenous.hpp"
#include "egg/equilibria.hpp"
#include "egg/game_file.hpp"
#include "egg/numeric.hpp"

namespace egg::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string game_path;
  std::string transfers_path;
  std::string tax_path;
  std::string profile;
  std::string outcome;
  std::string budget_mode = "zero";
  double step = 1.0;
  double bound = 1.0;
  int grid_k = 10;
  int player = 0;
  int cap = 1000;
  std::int64_t family_cap = 10'000'000;
  bool strict = false;
  bool weak = false;
  unsigned seed = 0;  // reserved for test harnesses; analyses are deterministic
};

BudgetMode budget_mode_of(const Options& opt) {
  if (opt.budget_mode == "zero") return BudgetMode::EffectiveCost;
  if (opt.budget_mode == "literal") return BudgetMode::LiteralNegatedCost;
  throw std::runtime_error("--budgets must be zero or literal");
}

ParsedGame load_game(const Options& opt) { return parse_game_file(read_file(opt.game_path)); }

TransferGrid grid_of(const Options& opt) { return {opt.step, opt.bound, opt.family_cap}; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_translate(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  if (!g.is_boolean()) throw std::runtime_error("translate expects a boolean game file");
  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  ParsedGame induced;
  induced.game = instantiate(e.base, e.goals, e.boost);
  induced.goals = GoalAssignment(induced.game);
  out << print_game_file(induced);
  return 0;
}

int cmd_ne(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  StrategicGame u = g.analysis_game();
  auto equilibria = pure_ne(u);
  out << "op: ne\n";
  out << "game: " << opt.game_path << "\n";
  out << "equilibria: " << equilibria.size() << "\n\n";
  out << "  #  profile  utility\n";
  for (std::size_t i = 0; i < equilibria.size(); ++i) {
    out << "  " << (i + 1) << "  " << profile_token(g, equilibria[i]) << " ";
    for (int p = 0; p < u.players(); ++p) out << ' ' << num_to_string(u.payoff(equilibria[i], p));
    out << '\n';
  }
  return 0;
}

int cmd_mixedne(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  StrategicGame u = g.analysis_game();
  auto equilibria = mixed_ne_2p(u);
  out << "op: mixedne\n";
  out << "game: " << opt.game_path << "\n";
  out << "equilibria: " << equilibria.size() << "\n\n";
  out << "  #  profile  expected-utility\n";
  for (std::size_t i = 0; i < equilibria.size(); ++i) {
    out << "  " << (i + 1) << "  " << equilibria[i].to_string(u) << " ";
    for (int p = 0; p < u.players(); ++p)
      out << ' ' << num_to_string(expected_utility(u, equilibria[i], p));
    out << '\n';
  }
  return 0;
}

int cmd_lexne(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  auto found = lex_ne_search(e.base, e.goals, opt.grid_k);
  auto pure = pure_lex_ne(e.base, e.goals);
  out << "op: lexne\n";
  out << "grid: " << opt.grid_k << "\n";
  out << "grid-equilibria: " << found.size() << "\n";
  out << "pure-equilibria: " << pure.size() << "\n";
  if (found.empty() && pure.empty()) {
    out << "result: none\n";
    return 1;
  }
  out << "\n";
  for (std::size_t i = 0; i < found.size(); ++i)
    out << "  grid " << (i + 1) << ": " << found[i].to_string(e.base) << '\n';
  for (std::size_t i = 0; i < pure.size(); ++i)
    out << "  pure " << (i + 1) << ": " << profile_token(g, pure[i]) << '\n';
  return 0;
}

int cmd_dominance(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  if (opt.strict == opt.weak) throw std::runtime_error("pass exactly one of --strict/--weak");
  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  DominatorKind kind = opt.grid_k > 0 && opt.weak ? DominatorKind::grid_mixes(opt.grid_k)
                                                  : DominatorKind::pure();
  DominanceResult res = dominance_eliminate(
      e.base, e.goals, opt.strict ? DominanceMode::Strict : DominanceMode::Weak, kind);
  out << "op: dominance\n";
  out << "mode: " << (opt.strict ? "strict" : "weak") << "\n";
  out << "eliminated: " << res.trace.size() << "\n\n";
  out << "  step  player  strategy  dominated-by\n";
  for (std::size_t i = 0; i < res.trace.size(); ++i)
    out << "  " << (i + 1) << "  " << res.trace[i].player << "  " << res.trace[i].strategy
        << "  " << res.trace[i].dominator << '\n';
  out << "\nsurviving:\n";
  for (int p = 0; p < res.game.players(); ++p) {
    out << "  player " << p << ":";
    for (const auto& label : res.game.strategy_labels(p)) out << ' ' << label;
    out << '\n';
  }
  return 0;
}

int cmd_apply(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  std::optional<TransferFunction> transfers = g.transfers;
  std::optional<TaxationMechanism> taxes = g.taxes;
  if (!opt.transfers_path.empty()) {
    auto aux = parse_auxiliary_file(read_file(opt.transfers_path), g);
    transfers = aux.transfers;
  }
  if (!opt.tax_path.empty()) {
    auto aux = parse_auxiliary_file(read_file(opt.tax_path), g);
    taxes = aux.taxes;
  }
  if (!transfers && !taxes) throw std::runtime_error("nothing to apply: no transfers or taxes");

  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  StrategicGame updated = e.base;
  if (transfers) updated = apply_transfers(updated, *transfers);
  if (taxes) updated = apply_tax(updated, *taxes);

  ParsedGame result;
  result.game = std::move(updated);
  result.goals = e.goals;
  if (g.is_boolean() || g.has_boost()) result.boost = e.boost;
  out << print_game_file(result);
  return 0;
}

ProfileIndex required_profile(const ParsedGame& g, const std::string& token) {
  if (token.empty()) throw std::runtime_error("--profile is required");
  return resolve_profile_token(g, token);
}

int cmd_endo_solo(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  SoloPayoffResult solo = solo_payoff(e, opt.player, grid_of(opt));
  out << "op: endo-solo\n";
  out << "player: " << opt.player << "\n";
  out << "grid-step: " << num_to_string(opt.step) << "\n";
  out << "grid-bound: " << num_to_string(opt.bound) << "\n";
  out << "family-size: " << transfer_family(e, opt.player, grid_of(opt)).size() << "\n";
  out << "full-grid: " << num_to_string(full_grid_cardinality(e, grid_of(opt))) << "\n";
  out << "solo-payoff: " << num_to_string(solo.value) << "\n";
  out << "approximate: " << yesno(solo.approximate) << "\n";
  out << "best-transfer: " << solo.best_transfer.describe(e.base) << "\n";
  out << "worst-equilibrium: " << solo.worst_equilibrium << "\n";
  return 0;
}

int cmd_endo_survive(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  ProfileIndex sigma = required_profile(g, opt.profile);
  SurvivalCheck check = check_survival_sufficient(e, sigma, grid_of(opt));
  out << "op: endo-survive\n";
  out << "profile: " << profile_token(g, sigma) << "\n";
  out << "status: " << (check.certified ? "certified" : "not-applicable") << "\n";
  out << "shareable: "
      << (check.shareability_required ? yesno(check.shareable) : std::string("not-required"))
      << "\n";
  out << "on-path-transfers: " << check.on_path.describe(e.base) << "\n";
  out << "on-path-kappa: " << num_to_string(check.on_path_kappa) << "\n";
  out << "on-path-ne: " << yesno(check.on_path_is_ne) << "\n";
  out << "approximate: " << yesno(check.approximate) << "\n\n";
  out << "  player  utility  solo  best-deviation | worst-equilibrium\n";
  for (std::size_t i = 0; i < check.rows.size(); ++i) {
    const SurvivalRow& row = check.rows[i];
    out << "  " << i << "  " << num_to_string(row.utility_at_profile) << "  "
        << num_to_string(row.solo) << "  " << row.best_deviation << " | "
        << row.worst_equilibrium << '\n';
  }
  return check.certified ? 0 : 1;
}

int cmd_endo_nonsurvival(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  ProfileIndex sigma = required_profile(g, opt.profile);
  auto cert = find_nonsurvival_certificate(e, sigma, grid_of(opt));
  out << "op: endo-nonsurvival\n";
  out << "profile: " << profile_token(g, sigma) << "\n";
  out << "status: " << (cert ? "certified" : "none") << "\n";
  if (!cert) return 1;
  out << "candidates: " << cert->candidates_scanned << "\n";
  out << "viable: " << cert->viable_candidates << "\n";
  out << "deviating-player: " << cert->deviating_player << "\n";
  out << "deviation: " << cert->deviation.describe(e.base) << "\n";
  out << "guaranteed: " << num_to_string(cert->guaranteed_value) << "\n";
  out << "utility-at-zero-transfers: " << num_to_string(cert->utility_at_zero_transfers) << "\n";
  out << "approximate: " << yesno(cert->approximate) << "\n";
  return 0;
}

int cmd_tax_synth(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  ProfileIndex sigma = required_profile(g, opt.profile);
  TaxSynthesis synth = synth_tax(e, sigma, grid_of(opt), opt.cap);
  out << "op: tax-synth\n";
  out << "profile: " << profile_token(g, sigma) << "\n";
  out << "status: " << (synth.success ? "success" : "failure") << "\n";
  out << "iterations: " << synth.iterations << "\n";
  if (!synth.success) {
    if (synth.blocking_player >= 0) out << "blocking-player: " << synth.blocking_player << "\n";
    if (!synth.shareable_at_exit) out << "shareable-at-exit: no\n";
  }
  for (ProfileIndex p = 0; p < synth.tax.profiles(); ++p)
    for (int i = 0; i < synth.tax.players(); ++i)
      if (synth.tax.tax(p, i) != 0.0)
        out << "tax " << i << ' ' << profile_token(g, p) << " : "
            << num_to_string(synth.tax.tax(p, i)) << '\n';
  return synth.success ? 0 : 1;
}

int cmd_check_shareable(const Options& opt, std::ostream& out) {
  ParsedGame g = load_game(opt);
  if (!g.is_boolean()) throw std::runtime_error("check shareable expects a boolean game file");
  if (opt.outcome.empty()) throw std::runtime_error("--outcome is required");
  ProfileIndex p = resolve_profile_token(g, opt.outcome);
  EndogenousGame e = g.to_endogenous(budget_mode_of(opt));
  int v = e.boolean->valuation_of_profile[static_cast<std::size_t>(p)];
  auto assignment = is_shareable(*g.boolean, v);
  bool potential = is_potentially_shareable(*g.boolean, v);
  out << "op: check-shareable\n";
  out << "outcome: " << profile_token(g, p) << "\n";
  out << "shareable: " << yesno(assignment.has_value()) << "\n";
  out << "potentially-shareable: " << yesno(potential) << "\n";
  if (assignment && !assignment->goal_players.empty()) {
    out << "\n  player  assigned-outcome\n";
    for (std::size_t i = 0; i < assignment->goal_players.size(); ++i)
      out << "  " << assignment->goal_players[i] << "  "
          << profile_token(g, e.boolean->profile_of_valuation[assignment->assigned_valuation[i]])
          << '\n';
  }
  return assignment ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"egg - analysis of strategic and boolean games with goals, side-payments "
               "and taxation"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "seed for randomized harnesses (analyses are deterministic)");

  auto add_game = [&](CLI::App* cmd) {
    cmd->add_option("game", opt.game_path, "game file")->required();
    cmd->add_option("--budgets", opt.budget_mode,
                    "budget mode for boolean games: zero (effective costs stay non-negative) "
                    "or literal (no net receipts)");
  };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--step", opt.step, "transfer grid step")->required();
    cmd->add_option("--bound", opt.bound, "transfer grid bound")->required();
    cmd->add_option("--grid-cap", opt.family_cap, "cap on enumerated grid families");
  };

  CLI::App* translate = app.add_subcommand("translate", "boolean game -> induced strategic game");
  add_game(translate);

  CLI::App* ne = app.add_subcommand("ne", "pure equilibria of the (instantiated) game");
  add_game(ne);

  CLI::App* mixedne = app.add_subcommand("mixedne", "mixed equilibria (two players)");
  add_game(mixedne);

  CLI::App* lexne = app.add_subcommand("lexne", "lexicographic equilibria on a simplex grid");
  add_game(lexne);
  lexne->add_option("--grid", opt.grid_k, "simplex resolution")->required();

  CLI::App* dominance = app.add_subcommand("dominance", "iterated dominance elimination");
  add_game(dominance);
  dominance->add_flag("--strict", opt.strict, "strict dominance");
  dominance->add_flag("--weak", opt.weak, "weak dominance");
  dominance->add_option("--grid", opt.grid_k, "grid resolution for mixed dominators (weak mode)");

  CLI::App* apply = app.add_subcommand("apply", "apply transfers/taxes to the payoffs");
  add_game(apply);
  apply->add_option("--transfers", opt.transfers_path, "transfer stanza file");
  apply->add_option("--tax", opt.tax_path, "tax stanza file");

  CLI::App* endo = app.add_subcommand("endo", "two-phase (pre-play transfer) analyses");
  endo->require_subcommand(1);
  CLI::App* solo = endo->add_subcommand("solo", "solo payoff of one player");
  add_game(solo);
  add_grid(solo);
  solo->add_option("--player", opt.player, "player id")->required();
  CLI::App* survive = endo->add_subcommand("survive", "sufficient survival check");
  add_game(survive);
  add_grid(survive);
  survive->add_option("--profile", opt.profile, "pure profile / outcome")->required();
  CLI::App* nonsurvival = endo->add_subcommand("nonsurvival", "grid non-survival certificate");
  add_game(nonsurvival);
  add_grid(nonsurvival);
  nonsurvival->add_option("--profile", opt.profile, "pure profile / outcome")->required();

  CLI::App* tax = app.add_subcommand("tax", "taxation design");
  tax->require_subcommand(1);
  CLI::App* synth = tax->add_subcommand("synth", "synthesize taxes forcing survival");
  add_game(synth);
  add_grid(synth);
  synth->add_option("--profile", opt.profile, "pure profile / outcome")->required();
  synth->add_option("--cap", opt.cap, "iteration cap");

  CLI::App* check = app.add_subcommand("check", "structural checks");
  check->require_subcommand(1);
  CLI::App* shareable = check->add_subcommand("shareable", "shareability of an outcome");
  add_game(shareable);
  shareable->add_option("--outcome", opt.outcome, "boolean outcome (atom=0/1 list)")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (translate->parsed()) return cmd_translate(opt, out);
    if (ne->parsed()) return cmd_ne(opt, out);
    if (mixedne->parsed()) return cmd_mixedne(opt, out);
    if (lexne->parsed()) return cmd_lexne(opt, out);
    if (dominance->parsed()) return cmd_dominance(opt, out);
    if (apply->parsed()) return cmd_apply(opt, out);
    if (endo->parsed()) {
      if (solo->parsed()) return cmd_endo_solo(opt, out);
      if (survive->parsed()) return cmd_endo_survive(opt, out);
      if (nonsurvival->parsed()) return cmd_endo_nonsurvival(opt, out);
    }
    if (tax->parsed() && synth->parsed()) return cmd_tax_synth(opt, out);
    if (check->parsed() && shareable->parsed()) return cmd_check_shareable(opt, out);
    err << "error: no command\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace egg::cli
